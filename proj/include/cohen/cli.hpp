#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohen {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitTrue = 0,   // predicate true, or the command succeeded
  kExitFalse = 1,  // predicate false, or a refusal with witnesses
  kExitUsage = 2,  // bad arguments, parse errors, exhausted budgets
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohen
