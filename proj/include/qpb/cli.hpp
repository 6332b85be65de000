#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpb {

class Transport;

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeLimit = 3;
inline constexpr int kExitUnavailable = 4;

/// Runs one invocation. `args` excludes the program name. `transport`
/// overrides the HTTP transport used by `oeis` (tests inject fakes).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Transport* transport = nullptr);

}  // namespace qpb
