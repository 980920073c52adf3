#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qed1d::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kUsage = 2,
    kDomain = 3,
    kComputation = 4,
};

/// Parses argv, runs the subcommand and writes the result to `out` (or the
/// --output file). Diagnostics go to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.17g") without locale dependence.
std::string format_number(double v);

}  // namespace qed1d::cli
