#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grodel {

/// Exit codes used by the command-line tool.
enum CliExit : int {
    kExitOk = 0,
    kExitUsage = 1,   // bad flags / unsupported combinations
    kExitInput = 2,   // I/O failures, parse errors, invalid edges, k > m
    kExitBudget = 3,  // enumeration budget exceeded
};

/// Runs the CLI on the given arguments (without the program name), writing
/// to the supplied streams. Returns a CliExit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grodel
