#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclescrub::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2, kWarning = 3 };

/// Runs one command line (without the program name) and returns the exit
/// status. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclescrub::cli
