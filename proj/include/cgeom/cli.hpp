#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cgeom {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // mathematical failure, report on stdout
  kExitInputError = 2,  // unreadable or malformed input, one line on stderr
};

/// Run the `cgeom` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgeom
