#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsaudit::cli {

/// Process exit codes. Stable contract.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kTotalConflict = 3,
  kInconsistent = 4,
  kInfeasible = 5,
};

/// Runs the command line (args excludes the program name) against the given
/// streams and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsaudit::cli
