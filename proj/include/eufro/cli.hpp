#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eufro {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_tie = 3, exit_selftest = 4 };

// Runs the command line (args excludes the program name). Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eufro
