#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sepclass/class_spec.hpp"

namespace sepclass {

/// <root>/<class>/<param_label>/coeffs_N<N>.json
std::filesystem::path golden_path(const std::filesystem::path& root, const ClassSpec& spec, std::uint32_t N);

/// Environment override SEPCLASS_GOLDEN_DIR, else `fallback`.
std::filesystem::path golden_root(const std::filesystem::path& fallback);

struct GoldenCheck {
  ClassSpec spec;
  bool ok = false;
  std::string message;  // empty when ok
};

/// Compares the oracle, basis-driven and closed-form series of each spec
/// against its stored file. A missing or unreadable file is a failure.
std::vector<GoldenCheck> compare_golden(const std::filesystem::path& root, const std::vector<ClassSpec>& specs,
                                        std::uint32_t N);

/// Writes the oracle series of each spec, creating directories as needed.
/// Returns the written paths.
std::vector<std::filesystem::path> bless_golden(const std::filesystem::path& root,
                                                const std::vector<ClassSpec>& specs, std::uint32_t N);

}  // namespace sepclass
