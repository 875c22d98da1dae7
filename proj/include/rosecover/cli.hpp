#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rosecover {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitInvalidConfig = 2,
  kExitDisconnected = 3,
  kExitZeroVector = 4,
  kExitRankTooSmall = 5,
  kExitSearchExhausted = 6,
  kExitDoesNotLift = 7,
};

/// Entry point of the `rosecover` tool. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rosecover
