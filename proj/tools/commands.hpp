#ifndef CTLOGIC_TOOLS_COMMANDS_HPP
#define CTLOGIC_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ctlogic::cli {

enum ExitStatus : int {
    exit_ok = 0,        // success / all checks pass
    exit_failure = 1,   // verification failure, lint errors or hazards
    exit_usage = 2,     // usage, parse or I/O error
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctlogic::cli

#endif  // CTLOGIC_TOOLS_COMMANDS_HPP
