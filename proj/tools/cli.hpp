#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace optosteer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

// Runs the command line `args` (without the program name). Exit codes:
// 0 success, 1 configuration or usage error, 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optosteer::cli
