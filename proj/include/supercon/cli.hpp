#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supercon::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kViolation = 1,  // verify found a bound violation
  kInput = 2,      // bad flags, unreadable or invalid input files
  kSanity = 3,     // an internal consistency check failed
  kIo = 4,         // output could not be written
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supercon::cli
