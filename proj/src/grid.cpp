#include "sepclass/grid.hpp"

#include <fstream>
#include <sstream>

#include "sepclass/errors.hpp"
#include "sepclass/json_io.hpp"

namespace sepclass {

VerifyGrid grid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("specs") || !j.at("specs").is_array()) {
    throw InvalidArgument("grid: expected {\"trunc\": N, \"specs\": [...]}");
  }
  VerifyGrid grid;
  if (j.contains("trunc")) {
    const Json& t = j.at("trunc");
    if (!t.is_number_unsigned()) throw InvalidArgument("grid: trunc must be a nonnegative integer");
    grid.trunc = t.get<std::uint32_t>();
  }
  for (const auto& s : j.at("specs")) grid.specs.push_back(class_spec_from_json(s));
  return grid;
}

Json to_json(const VerifyGrid& grid) {
  Json specs = Json::array();
  for (const auto& s : grid.specs) specs.push_back(to_json(s));
  return Json{{"trunc", grid.trunc}, {"specs", specs}};
}

VerifyGrid load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read grid file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return grid_from_json(parse_json(buf.str()));
}

}  // namespace sepclass
