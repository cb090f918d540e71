#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringcodes::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityViolation = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON goes to
/// `out`, diagnostics to `err`; code files named "-" (or omitted) are read
/// from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ringcodes::cli
