#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hesslie {

/// Exit codes of run_command.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerdictFailure = 1,
  kExitInputError = 2,
};

/// Runs one command line (without the program name). Reports go to `out`;
/// diagnostics, and reports displaced by a document on stdout, go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hesslie
