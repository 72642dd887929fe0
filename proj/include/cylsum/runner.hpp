#ifndef CYLSUM_RUNNER_HPP
#define CYLSUM_RUNNER_HPP

#include <string>

#include "cylsum/report.hpp"
#include "cylsum/space.hpp"

namespace cylsum {

/// Exit status contract: 0 success, 1 check failure, 2 usage/config error.
struct RunResult {
    Report report;
    int exit_code = 0;
};

CylinderSpace space_from_config(const RunConfig& cfg);

/// Dispatch one CLI subcommand.  Throws ConfigError for unusable inputs
/// (the caller maps that to exit status 2).
RunResult run_command(const std::string& command, const RunConfig& cfg);

}  // namespace cylsum

#endif
