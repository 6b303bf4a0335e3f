#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bumpless {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitInternal = 3,
  kExitVerificationFailed = 4,
};

// `args` excludes the program name. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bumpless
