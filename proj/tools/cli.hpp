#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcol::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,       // a coloring failed verification
  kPrecondition = 2,  // hypothesis, parameter or partial-coloring failure
  kParse = 3,         // malformed or unreadable input
  kBudget = 4,        // a search or sampler ran out of nodes
};

/// Runs one command line (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oddcol::cli
