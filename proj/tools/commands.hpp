#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace yaglom::cli {

/// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Data goes to `out`
/// unless an output file is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yaglom::cli
