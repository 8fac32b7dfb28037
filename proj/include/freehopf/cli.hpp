#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freehopf::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kDomainError = 2,
  kInconclusive = 3,
  kCheckFailed = 4,
  kInternalError = 5,
};

/// Runs one invocation; `args` excludes the program name. The result goes to
/// `out` only on success, diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freehopf::cli
