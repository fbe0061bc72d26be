#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unitcircle::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line (without the program name). Data goes to out,
/// diagnostics to err; files are written when --out / --json ask for it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitcircle::cli
