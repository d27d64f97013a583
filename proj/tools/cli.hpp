#pragma once

// The precy command line, callable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace precy::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kInconsistent = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace precy::cli
