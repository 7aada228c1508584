#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordcli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kError = 2,
  kUnknown = 3,
};

/// Runs one `ord` command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordcli
