#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracschrod::app {

/// Runs `fracschrod <subcommand> ...` with args excluding the program name.
/// Returns the process exit status: 0 on success, 1 on a solver or I/O
/// failure, 2 on a usage error. Verdicts never affect the status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracschrod::app
