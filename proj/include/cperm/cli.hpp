#ifndef CPERM_CLI_HPP
#define CPERM_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace cperm::cli {

enum ExitCode : int {
  kOk = 0,
  kConstraintError = 1,  // conflict, out-of-range position, empty set
  kParseError = 2,       // constraint text does not match the grammar
  kUsageError = 3,
  kVerifyMismatch = 4,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace cperm::cli

#endif  // CPERM_CLI_HPP
