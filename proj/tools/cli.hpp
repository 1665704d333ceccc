#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace keyfactor::cli {

/// Exit codes: 0 success, 1 validation or content error, 2 IO or format error.
enum ExitCode : int { kOk = 0, kContentError = 1, kIoError = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace keyfactor::cli
