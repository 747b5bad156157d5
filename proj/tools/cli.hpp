#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cycubic::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kInvalidInput = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to `out`
/// (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycubic::cli
