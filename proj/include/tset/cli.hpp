#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tset::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,          // success, predicate true, no violations
  kFalse = 1,       // predicate false or violations found
  kUsage = 2,       // bad flags, unknown theorem/op/example id
  kBadInput = 3,    // input file or subset failed validation
};

/// Runs the command line `args` (args[0] is the program name) writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tset::cli
