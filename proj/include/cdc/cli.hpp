#pragma once

#include <iosfwd>

namespace cdc {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitUsage = 2,
    kExitBudget = 3,
};

/// Runs the `cdc` command line. All output goes to `out` / `err`, so tests can
/// drive it in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdc
