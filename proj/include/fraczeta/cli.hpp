#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fraczeta::cli {

enum ExitCode : int { kOk = 0, kInvalid = 2, kNumerical = 3 };

/// Runs one subcommand. `args` excludes the program name. Table output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fraczeta::cli
