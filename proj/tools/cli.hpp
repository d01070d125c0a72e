#pragma once

#include <iosfwd>

namespace hyperspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNotConverged = 2,
  kVerificationFailed = 3,
};

/// Runs the command line tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperspec::cli
