#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersim::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kBudgetExhausted = 2,
  kMemoryFull = 3,
  kViolations = 2,
};

/// Runs the command line `args` (program name excluded). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersim::cli
