#ifndef ADDCHOW_CLI_COMMANDS_HPP
#define ADDCHOW_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace addchow {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitUnsupported = 3 };

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addchow

#endif  // ADDCHOW_CLI_COMMANDS_HPP
