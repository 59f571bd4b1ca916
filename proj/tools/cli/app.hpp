#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bootperc::cli {

/// Stable exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInconclusive = 2,
  kVerificationFailure = 3,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bootperc::cli
