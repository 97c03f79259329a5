#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelsq::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out` unless -o names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelsq::cli
