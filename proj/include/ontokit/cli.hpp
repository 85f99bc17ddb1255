#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ontokit::cli {

enum ExitCode : int {
    kSuccess = 0,
    /// Inconsistency, unsatisfiable concept, failed probe expectation, broken link.
    kFinding = 1,
    /// Unreadable input, parse error or bad arguments.
    kUsage = 2,
    kResourceLimit = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontokit::cli
