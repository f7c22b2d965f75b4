#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace woct {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitIo = 3 };

/// Entry point of the `woct` command line tool. Reports go to `out` unless
/// --out names a file; diagnostics and usage text go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Property checks understood by `verify`.
const std::vector<std::string>& verify_check_names();
/// Inequality checks understood by `inequalities`.
const std::vector<std::string>& inequality_check_names();

/// "start:stop:step", stop included. Throws bad-spec.
std::vector<double> parse_sweep(const std::string& text);

}  // namespace woct
