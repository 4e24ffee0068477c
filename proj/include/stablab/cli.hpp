#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablab {

/// Exit codes of the `stablab` tool.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kOutOfTolerance = 1;  // check-metric audit failed
inline constexpr int kInput = 2;           // parse, certificate or argument error
inline constexpr int kBackend = 3;         // numeric failure, mismatch, search gave up
inline constexpr int kCaps = 4;            // enumeration caps exceeded
inline constexpr int kNotConverged = 5;    // solve did not converge or certify
inline constexpr int kAllBinsEmpty = 6;    // rate produced no samples at all
}  // namespace exit_code

/// Runs one tool invocation in-process. `args` excludes the program name.
/// Reports go to `out` unless `--out` names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablab
