#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gframe::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kUsageError = 2,
  kPreconditionFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). Reports are
/// written to `out` as one line of deterministic JSON; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gframe::cli
