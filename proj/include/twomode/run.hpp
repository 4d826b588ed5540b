#pragma once

#include <iosfwd>

#include "twomode/config.hpp"

namespace twomode {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_config = 2, exit_solver = 3 };

// Runs one subcommand, writing CSVs and manifest.txt into cfg.out.
int run(const RunConfig& cfg, std::ostream& log);

}  // namespace twomode
