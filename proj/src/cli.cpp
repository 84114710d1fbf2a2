#include "sepclass/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sepclass/bases.hpp"
#include "sepclass/classes.hpp"
#include "sepclass/errors.hpp"
#include "sepclass/golden.hpp"
#include "sepclass/grid.hpp"
#include "sepclass/json_io.hpp"
#include "sepclass/qfunctions.hpp"
#include "sepclass/theorems.hpp"

namespace sepclass::cli {

namespace {

enum class Format { Plain, Json, Csv };

struct SpecFlags {
  std::string cls;
  std::uint32_t a = 0, b = 0, c = 0, k = 0, r = 0, d = 0, h = 0, s = 0;
  CLI::Option *oa = nullptr, *ob = nullptr, *oc = nullptr, *ok = nullptr, *orr = nullptr, *od = nullptr,
              *oh = nullptr, *os = nullptr;

  CLI::Option* attach(CLI::App& app, bool required = true) {
    auto* ocls = app.add_option("--class", cls, "P, Pprime, R, Rr, Fbar, Lbar, Fr, Lr or G");
    if (required) ocls->required();
    oa = app.add_option("--a", a);
    ob = app.add_option("--b", b);
    oc = app.add_option("--c", c);
    ok = app.add_option("--k", k);
    orr = app.add_option("--r", r);
    od = app.add_option("--d", d);
    oh = app.add_option("--h", h);
    os = app.add_option("--s", s);
    return ocls;
  }

  ClassSpec build() const {
    SpecParams p;
    auto take = [](CLI::Option* o, std::uint32_t v, std::optional<std::uint32_t>& slot) {
      if (o && o->count() > 0) slot = v;
    };
    take(oa, a, p.a), take(ob, b, p.b), take(oc, c, p.c), take(ok, k, p.k);
    take(orr, r, p.r), take(od, d, p.d), take(oh, h, p.h), take(os, s, p.s);
    return ClassSpec::make(parse_class_kind(cls), p);
  }
};

struct Common {
  std::string format = "plain";
  std::string out_path;
  std::uint32_t max_trunc = 200;

  void attach(CLI::App& app) {
    app.add_option("--format", format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--max-trunc", max_trunc, "guardrail on --n / --trunc");
  }

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Plain;
  }

  void guard(std::uint32_t value, const char* flag) const {
    if (value > max_trunc) {
      throw InvalidArgument(std::string(flag) + " " + std::to_string(value) + " exceeds the guardrail " +
                            std::to_string(max_trunc) + " (raise it with --max-trunc)");
    }
  }
};

[[noreturn]] void unsupported(const char* payload, Format f) {
  throw UnsupportedFormat(std::string(payload) + " has no " + (f == Format::Csv ? "csv" : "plain") + " form");
}

std::string csv_row(const ClassObject& obj) {
  std::string row;
  auto sep = [&] {
    if (!row.empty()) row += ',';
  };
  if (const auto* p = std::get_if<Partition>(&obj)) {
    for (auto x : p->parts()) sep(), row += std::to_string(x);
  } else {
    for (const auto& x : std::get<Overpartition>(obj).parts()) {
      sep(), row += std::to_string(x.magnitude);
      if (x.overlined) row += '\'';
    }
  }
  return row;
}

std::string emit_objects(Format f, const std::vector<ClassObject>& objs) {
  std::string text;
  switch (f) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& o : objs) arr.push_back(to_json(o));
      return arr.dump() + "\n";
    }
    case Format::Csv:
      for (const auto& o : objs) text += csv_row(o) + "\n";
      return text;
    case Format::Plain:
      for (const auto& o : objs) text += to_string(o) + "\n";
      return text;
  }
  return text;
}

std::string emit_series(Format f, const Series& s) {
  if (f == Format::Json) return to_json(s).dump() + "\n";
  std::ostringstream text;
  const char sep = f == Format::Csv ? ',' : ' ';
  if (f == Format::Plain) {
    text << 'q';
    for (const auto& n : s.shape().names) text << ' ' << n;
    text << " coeff\n";
  }
  for (const auto& [key, c] : s.terms()) {
    text << key.q;
    for (std::size_t i = 0; i < s.arity(); ++i) text << sep << key.marks[i];
    text << sep << c.str() << '\n';
  }
  return text.str();
}

std::string plain_report(const VerificationReport& r) {
  std::ostringstream text;
  text << (r.status == Status::Match ? "MATCH" : "MISMATCH") << ' ' << r.spec.dump() << " N=" << r.N << " routes=";
  for (std::size_t i = 0; i < r.routes.size(); ++i) text << (i ? "," : "") << r.routes[i];
  if (r.first_discrepancy) {
    const auto& d = *r.first_discrepancy;
    text << " first difference at q^" << d.key.q;
    for (std::size_t i = 0; i < r.marker_names.size(); ++i) text << ' ' << r.marker_names[i] << '^' << d.key.marks[i];
    text << ':';
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) text << ' ' << r.routes[i] << '=' << d.coeffs[i].str();
  }
  text << " elapsed_ms=" << static_cast<long long>(r.elapsed_ms + 0.5) << '\n';
  return text.str();
}

std::string emit_reports(Format f, const std::vector<VerificationReport>& reports, bool as_array) {
  if (f == Format::Csv) unsupported("verification report", f);
  if (f == Format::Json) {
    if (!as_array) return to_json(reports.front()).dump() + "\n";
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump() + "\n";
  }
  std::string text;
  for (const auto& r : reports) text += plain_report(r);
  return text;
}

ClassObject parse_object(const ClassSpec& spec, const std::string& text) {
  if (spec.is_overpartition_class()) return parse_overpartition(text, spec.convention());
  return parse_partition(text);
}

std::string join_padding(const std::vector<Part>& padding) {
  std::string text = "(";
  for (std::size_t i = 0; i < padding.size(); ++i) text += (i ? "," : "") + std::to_string(padding[i]);
  return text + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separable partition classes: enumeration, bases, series and verification"};
  app.require_subcommand(1, 1);
  app.set_help_flag("--help", "print help");  // -h would clash with --h

  // one flag set per subcommand, so option counts are not shared
  std::map<CLI::App*, SpecFlags> flag_sets;
  Common common;
  std::uint32_t n = 0, m = 0, trunc = 25, max_weight = 0;
  std::string parts, route = "oracle", grid_path, golden_dir = "golden", identity_name;
  bool literal = false, bless = false, check_golden = false;
  unsigned jobs = 1;
  IdentityParams ip;

  auto* count = app.add_subcommand("count", "number of class members of weight n");
  auto* list = app.add_subcommand("list", "class members of weight n");
  auto* basis = app.add_subcommand("basis", "basis elements with m parts");
  auto* series = app.add_subcommand("series", "truncated generating function");
  auto* decomp = app.add_subcommand("decompose", "basis plus padding form of a member");
  auto* verify_cmd = app.add_subcommand("verify", "three-route verification");
  auto* identity = app.add_subcommand("identity", "check a q-series identity");

  for (auto* sub : {count, list, basis, series, decomp}) {
    flag_sets[sub].attach(*sub);
    common.attach(*sub);
  }
  for (auto* sub : {count, list}) sub->add_option("--n", n, "weight")->required();

  basis->add_option("--m", m, "number of parts")->required();
  auto* basis_n = basis->add_option("--n", max_weight, "only elements of weight <= n");

  series->add_option("--trunc", trunc, "truncation order");
  series->add_option("--route", route, "oracle, basis, closed or literal")
      ->check(CLI::IsMember({"oracle", "basis", "closed", "literal"}));

  decomp->add_option("--parts", parts, "member, e.g. 5,3,1 or 3',1")->required();

  // verify takes either one spec or a grid file
  auto* v_class = flag_sets[verify_cmd].attach(*verify_cmd, false);
  common.attach(*verify_cmd);
  auto* v_trunc = verify_cmd->add_option("--trunc", trunc, "truncation order (overrides the grid's)");
  auto* v_grid = verify_cmd->add_option("--grid", grid_path, "grid config file");
  verify_cmd->add_flag("--literal", literal, "Lr only: use the series exactly as typeset");
  verify_cmd->add_option("--jobs", jobs, "worker threads for a grid");
  verify_cmd->add_flag("--bless", bless, "grid only: rewrite the golden corpus from the oracle");
  verify_cmd->add_flag("--check-golden", check_golden, "grid only: compare every route with the golden corpus");
  auto* v_golden = verify_cmd->add_option("--golden-dir", golden_dir, "golden corpus root (env SEPCLASS_GOLDEN_DIR)");
  v_grid->excludes(v_class);

  common.attach(*identity);
  identity->add_option("--id", identity_name, "thm2.2, cor2.3, thm2.5, cor2.6, cauchy1, cauchy2, recurrence")
      ->required();
  identity->add_option("--d", ip.d);
  identity->add_option("--k", ip.k);
  identity->add_option("--r", ip.r);
  identity->add_option("--h", ip.h);
  identity->add_option("--s", ip.s);
  identity->add_option("--A", ip.A);
  identity->add_option("--B", ip.B);
  auto* id_trunc = identity->add_option("--trunc", trunc, "truncation order (default 30)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Format f = common.fmt();
    CLI::App* active = app.get_subcommands().front();
    auto spec_of = [&] { return flag_sets.at(active).build(); };
    std::string text;
    int code = 0;

    if (count->parsed()) {
      common.guard(n, "--n");
      const ClassSpec spec = spec_of();
      const auto c = enumerate(spec, n).size();
      if (f == Format::Json) {
        text = Json{{"spec", to_json(spec)}, {"n", n}, {"count", c}}.dump() + "\n";
      } else {
        text = std::to_string(c) + "\n";
      }
    } else if (list->parsed()) {
      common.guard(n, "--n");
      text = emit_objects(f, enumerate(spec_of(), n));
    } else if (basis->parsed()) {
      const ClassSpec spec = spec_of();
      std::optional<std::uint64_t> bound;
      if (basis_n->count() > 0) bound = max_weight;
      if (!bound) common.guard(m, "--m");
      text = emit_objects(f, enumerate_basis(spec, m, bound));
    } else if (series->parsed()) {
      common.guard(trunc, "--trunc");
      const ClassSpec spec = spec_of();
      Series s = Series::zero(spec.series_shape(trunc));
      if (route == "oracle") {
        s = spec.kind() == ClassKind::Gset ? G_gf(spec, trunc) : refined_gf(spec, trunc);
      } else if (route == "basis") {
        s = basis_driven_gf(spec, trunc);
      } else if (route == "closed") {
        s = closed_form_gf(spec, trunc);
      } else {
        s = closed_form_gf(Theorem::LrLiteral, spec, trunc);
      }
      text = emit_series(f, s);
    } else if (decomp->parsed()) {
      const ClassSpec spec = spec_of();
      const Decomposition d = decompose(spec, parse_object(spec, parts));
      if (f == Format::Csv) unsupported("decomposition", f);
      if (f == Format::Json) {
        text = to_json(d).dump() + "\n";
      } else {
        text = "basis " + to_string(d.basis) + " padding " + join_padding(d.padding) + "\n";
      }
    } else if (verify_cmd->parsed()) {
      if (v_grid->count() > 0) {
        VerifyGrid grid = load_grid(grid_path);
        if (v_trunc->count() > 0) grid.trunc = trunc;
        common.guard(grid.trunc, "--trunc");
        if (literal) throw InvalidArgument("--literal applies to a single Lr spec, not a grid");
        const auto root = v_golden->count() > 0 ? std::filesystem::path(golden_dir) : golden_root(golden_dir);
        if (bless) {
          for (const auto& p : bless_golden(root, grid.specs, grid.trunc)) err << "wrote " << p.string() << '\n';
        }
        if (check_golden) {
          for (const auto& c : compare_golden(root, grid.specs, grid.trunc)) {
            if (!c.ok) {
              err << "golden: " << c.message << '\n';
              code = 1;
            }
          }
        }
        const auto reports = verify_all(grid.specs, grid.trunc, std::max(1u, jobs));
        for (const auto& r : reports) {
          if (r.status == Status::Mismatch) code = 1;
        }
        text = emit_reports(f, reports, true);
      } else {
        if (v_class->count() == 0) throw InvalidArgument("verify needs --class or --grid");
        if (bless || check_golden) throw InvalidArgument("--bless and --check-golden need --grid");
        common.guard(trunc, "--trunc");
        const ClassSpec spec = spec_of();
        if (literal && spec.kind() != ClassKind::Lr) throw InvalidArgument("--literal applies to Lr only");
        const auto report = verify(spec, literal ? Theorem::LrLiteral : default_theorem(spec), trunc);
        code = report.status == Status::Match ? 0 : 1;
        text = emit_reports(f, {report}, false);
      }
    } else if (identity->parsed()) {
      if (id_trunc->count() == 0) trunc = 30;
      common.guard(trunc, "--trunc");
      const auto report = check_identity(parse_identity(identity_name), ip, trunc);
      code = report.status == Status::Match ? 0 : 1;
      text = emit_reports(f, {report}, false);
    }

    if (!common.out_path.empty()) {
      std::ofstream file(common.out_path, std::ios::binary);
      if (!file) throw InvalidArgument("cannot write " + common.out_path);
      file << text;
    } else {
      out << text;
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace sepclass::cli
