#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heightline::cli {

/// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or validation error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `heightline <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heightline::cli
