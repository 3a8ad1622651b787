#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perdecomp {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitPrecondition = 3,
    kExitNumeric = 4,
};

/// Runs one invocation. args excludes the program name. Reports go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perdecomp
