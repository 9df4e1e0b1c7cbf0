#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freecert {

// Exit codes shared by every subcommand.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUndecided = 3;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freecert
