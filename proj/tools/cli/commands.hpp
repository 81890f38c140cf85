#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cevian::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitPositive = 0,      // concurrent / found / member
  kExitNegative = 1,      // not concurrent / not found / rejected point
  kExitInputError = 2,    // parse errors, violated preconditions
  kExitDisagreement = 3,  // criterion and geometric oracle disagree
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out` as JSON, diagnostics and the one-line status to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cevian::cli
