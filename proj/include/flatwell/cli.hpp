#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatwell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;

/// Runs `flatwell <args...>` (program name excluded), writing the report to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatwell::cli
