// Command-line front end: build, propagate, designations, verify, bounds.

#ifndef ECCAD_CLI_HPP
#define ECCAD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace eccad {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFail = 2,      // a designated EC or lifting polynomial was nullified
  kExitMismatch = 3,  // verification found a violation
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eccad

#endif  // ECCAD_CLI_HPP
