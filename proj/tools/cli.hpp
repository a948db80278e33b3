// CLI dispatch, separated from main() so tests can run subcommands
// in-process and inspect exit codes and output.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nelab::cli {

// Runs one invocation. argv excludes the program name.
// Returns the process exit code: 0 = success / property holds,
// 1 = checked property fails, 2 = usage or input error.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace nelab::cli
