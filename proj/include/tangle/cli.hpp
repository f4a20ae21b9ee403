#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tangle::cli {

enum ExitCode : int {
  success = 0,
  failure = 1,
  usage_error = 2,
  budget_exceeded = 3,
  hypothesis_violation = 4,
};

/// Version string embedded in every report.
const char *version();

/// Runs the command line `args` (program name first). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace tangle::cli
