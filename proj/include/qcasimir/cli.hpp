#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcasimir::cli {

enum ExitCode { kSuccess = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the command line given without the program name. Results go to out,
/// diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcasimir::cli
