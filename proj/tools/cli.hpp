#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcorr::cli {

/// Exit codes shared by every subcommand.
enum ExitCode {
  kOk = 0,
  kInvalidState = 1,
  kUsageError = 2,
  kConvergenceFailure = 3,
  kViolations = 4,
};

/// Runs the CLI on `args` (subcommand first, no program name) writing to the
/// given streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcorr::cli
