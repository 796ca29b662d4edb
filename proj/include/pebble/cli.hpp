#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pebble::cli {

enum ExitCode : int {
  kOk = 0,
  kRefuted = 1,   // counterexample found or bounds disagree
  kUsage = 2,     // bad arguments, unreadable or malformed input
  kResource = 3,  // node cap exceeded
};

/// Runs one command. `args` excludes the program name. Stable results go to
/// `out` as "RESULT key=value ..." lines; everything else goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pebble::cli
