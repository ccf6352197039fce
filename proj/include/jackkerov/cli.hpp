#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jackkerov {

enum ExitCode { kOk = 0, kUsage = 1, kCap = 2, kTheorem = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jackkerov
