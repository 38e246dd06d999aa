#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svrasym::cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       ///< malformed flags, bad config, unknown ids, I/O errors
  kExitInfeasible = 2,  ///< infeasible problem, unsupported regime, solver non-convergence
};

/// Entry point of the `svrasym` tool. Tables go to `out` (or --output), messages to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,c" or "lo:step:hi" (inclusive). Throws std::invalid_argument.
std::vector<double> parse_grid(const std::string& text);

}  // namespace svrasym::cli
