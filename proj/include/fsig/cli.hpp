#ifndef FSIG_CLI_HPP
#define FSIG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "fsig/report.hpp"

namespace fsig {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitResource = 3,
  kExitParse = 4,
};

/// Runs the command line `fsig <args...>` (args excludes the program name).
/// Reports go to `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The --self-test report: every registry example checked against its own
/// validation and a short run of each computation.
Json self_test_report();

}  // namespace fsig

#endif  // FSIG_CLI_HPP
