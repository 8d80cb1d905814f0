#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mexp::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsage = 2, kStrategy = 3 };

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mexp::cli
