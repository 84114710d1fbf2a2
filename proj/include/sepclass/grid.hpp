#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepclass/class_spec.hpp"
#include "sepclass/theorems.hpp"

namespace sepclass {

/// Parameter points and truncation order of a verification run.
struct VerifyGrid {
  std::uint32_t trunc = 25;
  std::vector<ClassSpec> specs;
};

/// {"trunc": N, "specs": [<ClassSpec JSON>, ...]}
VerifyGrid grid_from_json(const Json& j);
Json to_json(const VerifyGrid& grid);

/// Reads a grid file; unreadable or malformed files raise InvalidArgument.
VerifyGrid load_grid(const std::string& path);

}  // namespace sepclass
