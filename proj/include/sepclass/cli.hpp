#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepclass::cli {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or match, 1 mismatch, 2 argument or validation error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepclass::cli
