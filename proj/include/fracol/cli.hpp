#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracol::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2 };

/// Runs one command line.  `args` excludes the program name.  Data goes to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fracol::cli
