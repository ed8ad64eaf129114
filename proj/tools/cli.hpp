#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace theta::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kUnsupported = 3 };

/// Runs the command line (without the program name) against the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta::cli
