#include "sepclass/json_io.hpp"

#include "sepclass/errors.hpp"

namespace sepclass {

namespace {

Json marks_json(const Marks& marks, std::size_t arity) {
  Json out = Json::array();
  for (std::size_t i = 0; i < arity; ++i) out.push_back(marks[i]);
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("JSON: missing field \"") + key + "\"");
  return j.at(key);
}

std::uint32_t as_u32(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InvalidArgument(std::string("JSON: ") + what + " must be a nonnegative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) throw InvalidArgument(std::string("JSON: ") + what + " out of range");
  return static_cast<std::uint32_t>(v);
}

BigInt as_bigint(const Json& j) {
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    const std::size_t digits_from = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == digits_from || text.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw InvalidArgument("JSON: bad coefficient \"" + text + "\"");
    }
    return BigInt(text);
  }
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw InvalidArgument("JSON: coefficient must be a decimal string");
}

Convention parse_convention(const Json& j) {
  if (j == "first") return Convention::First;
  if (j == "last") return Convention::Last;
  throw InvalidArgument("JSON: convention must be \"first\" or \"last\"");
}

}  // namespace

Json to_json(const Partition& p) {
  Json parts = Json::array();
  for (auto x : p.parts()) parts.push_back(x);
  return Json{{"parts", parts}};
}

Json to_json(const Overpartition& p) {
  Json parts = Json::array();
  for (const auto& x : p.parts()) parts.push_back(Json{{"m", x.magnitude}, {"over", x.overlined}});
  return Json{{"convention", to_string(p.convention())}, {"parts", parts}};
}

Json to_json(const ClassObject& obj) {
  return std::visit([](const auto& o) { return to_json(o); }, obj);
}

Json to_json(const Decomposition& d) {
  Json padding = Json::array();
  for (auto x : d.padding) padding.push_back(x);
  return Json{{"basis", to_json(d.basis)}, {"padding", padding}};
}

Json to_json(const Series& s) {
  const Shape& sh = s.shape();
  Json out = {{"trunc", sh.trunc}, {"markers", sh.names}};
  bool default_caps = true;
  for (auto c : sh.caps) default_caps = default_caps && c == sh.trunc;
  if (!default_caps) out["caps"] = sh.caps;
  Json terms = Json::array();
  for (const auto& [key, c] : s.terms()) {
    terms.push_back(Json{{"q", key.q}, {"marks", marks_json(key.marks, sh.arity())}, {"coeff", c.str()}});
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const ClassSpec& spec) {
  Json out = {{"class", to_string(spec.kind())}};
  switch (spec.kind()) {
    case ClassKind::P:
    case ClassKind::Pprime:
      out.update({{"a", spec.a()}, {"b", spec.b()}, {"k", spec.k()}, {"r", spec.r()}});
      break;
    case ClassKind::R:
      out.update({{"a", spec.a()}, {"b", spec.b()}, {"c", spec.c()}, {"k", spec.k()}});
      break;
    case ClassKind::Rr:
      out.update({{"a", spec.a()}, {"b", spec.b()}, {"c", spec.c()}, {"k", spec.k()}, {"r", spec.r()}});
      break;
    case ClassKind::Fbar:
    case ClassKind::Lbar:
      break;
    case ClassKind::Fr:
    case ClassKind::Lr:
      out["r"] = spec.r();
      break;
    case ClassKind::Gset:
      out.update({{"d", spec.d()}, {"k", spec.k()}, {"r", spec.r()}, {"h", spec.h()}, {"s", spec.s()}});
      break;
  }
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out = {{"spec", report.spec}, {"N", report.N}, {"routes", report.routes},
              {"status", report.status == Status::Match ? "match" : "mismatch"}};
  if (report.first_discrepancy) {
    const auto& d = *report.first_discrepancy;
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) coeffs[report.routes.at(i)] = d.coeffs[i].str();
    out["first_discrepancy"] = Json{
        {"q", d.key.q}, {"marks", marks_json(d.key.marks, report.marker_names.size())}, {"coeffs", coeffs}};
  } else {
    out["first_discrepancy"] = nullptr;
  }
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

ClassObject class_object_from_json(const Json& j) {
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) throw InvalidArgument("JSON: \"parts\" must be an array");
  if (j.contains("convention")) {
    const Convention conv = parse_convention(j.at("convention"));
    std::vector<OverPart> out;
    for (const auto& p : parts) {
      const Json& over = field(p, "over");
      if (!over.is_boolean()) throw InvalidArgument("JSON: \"over\" must be a boolean");
      out.push_back(OverPart{as_u32(field(p, "m"), "part"), over.get<bool>()});
    }
    return Overpartition(std::move(out), conv);
  }
  std::vector<Part> out;
  for (const auto& p : parts) out.push_back(as_u32(p, "part"));
  return Partition(std::move(out));
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d{class_object_from_json(field(j, "basis")), {}};
  const Json& padding = field(j, "padding");
  if (!padding.is_array()) throw InvalidArgument("JSON: \"padding\" must be an array");
  for (const auto& p : padding) d.padding.push_back(as_u32(p, "padding entry"));
  return d;
}

Series series_from_json(const Json& j) {
  const std::uint32_t trunc = as_u32(field(j, "trunc"), "trunc");
  const Json& markers = field(j, "markers");
  if (!markers.is_array() || markers.size() > kMaxMarkers) throw InvalidArgument("JSON: bad \"markers\"");
  std::vector<std::string> names;
  for (const auto& m : markers) {
    if (!m.is_string()) throw InvalidArgument("JSON: marker names must be strings");
    names.push_back(m.get<std::string>());
  }
  Shape shape = Shape::with_markers(trunc, names);
  if (j.contains("caps")) {
    const Json& caps = j.at("caps");
    if (!caps.is_array() || caps.size() != names.size()) throw InvalidArgument("JSON: bad \"caps\"");
    for (std::size_t i = 0; i < names.size(); ++i) shape.caps[i] = as_u32(caps[i], "cap");
  }
  Series out(shape);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InvalidArgument("JSON: \"terms\" must be an array");
  for (const auto& t : terms) {
    TermKey key{as_u32(field(t, "q"), "q"), {}};
    const Json& marks = field(t, "marks");
    if (!marks.is_array() || marks.size() != names.size()) throw InvalidArgument("JSON: marks arity mismatch");
    for (std::size_t i = 0; i < names.size(); ++i) key.marks[i] = as_u32(marks[i], "mark");
    out.add_term(key, as_bigint(field(t, "coeff")));
  }
  return out;
}

ClassSpec class_spec_from_json(const Json& j) {
  const Json& cls = field(j, "class");
  if (!cls.is_string()) throw InvalidArgument("JSON: \"class\" must be a string");
  SpecParams params;
  for (const auto& [key, value] : j.items()) {
    if (key == "class") continue;
    std::optional<std::uint32_t>* slot = nullptr;
    if (key == "a") slot = &params.a;
    else if (key == "b") slot = &params.b;
    else if (key == "c") slot = &params.c;
    else if (key == "k") slot = &params.k;
    else if (key == "r") slot = &params.r;
    else if (key == "d") slot = &params.d;
    else if (key == "h") slot = &params.h;
    else if (key == "s") slot = &params.s;
    else throw InvalidArgument("JSON: unknown spec field \"" + key + "\"");
    *slot = as_u32(value, key.c_str());
  }
  return ClassSpec::make(parse_class_kind(cls.get<std::string>()), params);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace sepclass
