#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfsing::cli {

enum ExitCode : int { kOk = 0, kRefused = 1, kUsage = 2 };

/// Runs one command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfsing::cli
