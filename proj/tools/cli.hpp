#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nullsol {

/// Runs the command line `args` (program name excluded). Returns the process
/// exit code: 0 decisive, 1 input or usage error, 2 some verdict UNKNOWN.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nullsol
