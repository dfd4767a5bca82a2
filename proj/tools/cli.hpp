#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proxdeg::cli {

enum ExitCode : int {
    kOk = 0,
    kRuntimeError = 1,
    kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name). Output files
/// named "-" or omitted go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxdeg::cli
