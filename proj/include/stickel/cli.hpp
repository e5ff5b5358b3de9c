#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stickel {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailedCheck = 1, kExitUsage = 2, kExitInternal = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stickel
