#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modcone::cli {

/// Exit codes: 0 success or check passed, 1 check failed or infeasible, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `modcone` with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modcone::cli
