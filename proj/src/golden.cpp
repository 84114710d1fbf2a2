#include "sepclass/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sepclass/classes.hpp"
#include "sepclass/errors.hpp"
#include "sepclass/json_io.hpp"
#include "sepclass/theorems.hpp"

namespace sepclass {

namespace fs = std::filesystem;

fs::path golden_path(const fs::path& root, const ClassSpec& spec, std::uint32_t N) {
  return root / to_string(spec.kind()) / spec.param_label() / ("coeffs_N" + std::to_string(N) + ".json");
}

fs::path golden_root(const fs::path& fallback) {
  if (const char* env = std::getenv("SEPCLASS_GOLDEN_DIR"); env && *env) return fs::path(env);
  return fallback;
}

std::vector<GoldenCheck> compare_golden(const fs::path& root, const std::vector<ClassSpec>& specs, std::uint32_t N) {
  std::vector<GoldenCheck> out;
  for (const auto& spec : specs) {
    GoldenCheck check{spec, false, {}};
    const fs::path path = golden_path(root, spec, N);
    try {
      std::ifstream in(path);
      if (!in) throw InvalidArgument("missing golden file " + path.string());
      std::stringstream buf;
      buf << in.rdbuf();
      const Json doc = parse_json(buf.str());
      if (!doc.contains("spec") || class_spec_from_json(doc.at("spec")) != spec) {
        throw InvalidArgument(path.string() + ": spec field does not match");
      }
      const Series stored = series_from_json(doc.at("series"));
      const std::pair<const char*, Series> routes[] = {
          {"oracle", refined_gf(spec, N)},
          {"basis", basis_driven_gf(spec, N)},
          {"closed", closed_form_gf(spec, N)},
      };
      for (const auto& [name, series] : routes) {
        if (!(series == stored)) throw InvalidArgument(path.string() + ": " + name + " route differs from golden");
      }
      check.ok = true;
    } catch (const Error& e) {
      check.message = e.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<fs::path> bless_golden(const fs::path& root, const std::vector<ClassSpec>& specs, std::uint32_t N) {
  std::vector<fs::path> written;
  for (const auto& spec : specs) {
    const fs::path path = golden_path(root, spec, N);
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    const Json doc = {{"spec", to_json(spec)}, {"N", N}, {"series", to_json(refined_gf(spec, N))}};
    out << doc.dump() << '\n';
    written.push_back(path);
  }
  return written;
}

}  // namespace sepclass
