#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ewm {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes of `run_cli`.
enum ExitCode : int { kExitOk = 0, kExitDataError = 1, kExitUsage = 2 };

/// Entry point of the `ewm` tool. `args` excludes the program name. Reports
/// go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ewm
