#pragma once

#include <ostream>

namespace qhz::cli {

/// Exit statuses of the qzeta tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kDomain = 2,
  kConvergence = 3,
  kNearPole = 4,
};

/// Entry point of the qzeta command line; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qhz::cli
