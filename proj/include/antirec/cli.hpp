#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antirec::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

// Runs one command line (without the program name). Data goes to out,
// diagnostics to err. Returns 0 on success or a passing check, 1 when a
// check fails or no machine is found, 2 on bad usage or invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antirec::cli
