#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace povu {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,      // malformed GFA or bad arguments
    kExitIo = 2,
    kExitSelfCheck = 3,  // internal invariant broken
};

/// Runs `povu` with `args` (program name excluded), writing the summary to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace povu
