#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wkb {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumeric = 2,
  kExitPartial = 3,
};

/// Runs the wkbq command line. args excludes the program name. Data goes to
/// out (or the --output file), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wkb
