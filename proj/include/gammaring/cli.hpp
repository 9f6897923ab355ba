#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammaring {

/// Exit codes of run_command.
enum ExitCode : int { kExitOk = 0, kExitVerdictFalse = 1, kExitUsage = 2, kExitCap = 3 };

/// Runs one gammactl command; `args` excludes the program name. The human
/// summary goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gammaring
