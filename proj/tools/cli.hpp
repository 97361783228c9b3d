#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cw::cli {

enum ExitCode : int {
  kOk = 0,
  kInvariantFailure = 1,
  kUsage = 2,
  kMismatch = 3,
};

/// Runs one cwtool invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cw::cli
