#ifndef CAYLEY_CLI_COMMANDS_HPP
#define CAYLEY_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_negative = 1,
  exit_usage = 2,
  exit_cap = 3,
};

// Runs one command line. args excludes the program name. Results go to
// out, diagnostics to err; the return value is the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli

#endif  // CAYLEY_CLI_COMMANDS_HPP
