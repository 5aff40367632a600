#ifndef ORBITALS_TOOLS_CLI_H_
#define ORBITALS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace orbitals::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kInputError = 2,
  kVerdictDisagreement = 3,
};

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace orbitals::cli

#endif  // ORBITALS_TOOLS_CLI_H_
