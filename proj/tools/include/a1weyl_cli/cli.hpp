#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a1weyl::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kConfig = 2,
  kIo = 3,
  kParse = 4,
  kDomain = 5,
  kCheckFailed = 6,
};

/// Runs the command line given without the program name. Everything the
/// command prints goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a1weyl::cli
