#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgeball {

/// Dispatch a command line (without argv[0]). Returns the process exit code:
/// 0 success, 1 input or usage error, 2 verified-false mathematical verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgeball
