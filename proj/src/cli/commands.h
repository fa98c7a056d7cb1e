#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tonesearch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   ///< bad flags or arguments
inline constexpr int kExitData = 3;    ///< well-formed invocation, bad data
inline constexpr int kExitGaveUp = 4;  ///< search stopped before k solutions

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
/// Kept separate from main() so tests can drive the CLI in-process.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tonesearch
