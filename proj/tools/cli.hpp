#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catherd::cli {

enum ExitCode {
  kOk = 0,
  kFailed = 1,  // a verification suite failed
  kUsage = 2,   // bad flags, unknown specs, malformed graphs
  kBudget = 3,  // refused by the size guards
  kError = 4,   // anything else
};

/// Runs the command line `args` (without the program name). `in` feeds the
/// interactive play loop.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace catherd::cli
