#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sondow::cli {

/// Exit-code contract shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sondow::cli
