#pragma once

#include <ostream>

namespace monocheck::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitMonogenic = 0,
  kExitNotMonogenic = 1,
  kExitInconclusive = 2,
  kExitUsage = 64,
  kExitInternal = 70,
};

/// Entry point of the monocheck command line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monocheck::cli
