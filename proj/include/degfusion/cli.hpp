#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degfusion {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidArguments = 2, kResourceLimit = 3 };

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degfusion
