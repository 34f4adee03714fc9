#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdsforge::cli {

/// Process exit statuses shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kFalse = 1,  // some verdict false or inconclusive
  kUsage = 2,
  kInvalid = 3,
  kBudget = 4,
};

/// Runs the command line `args` (program name excluded), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdsforge::cli
