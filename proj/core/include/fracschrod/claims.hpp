#pragma once

#include <vector>

#include "fracschrod/config.hpp"
#include "fracschrod/report.hpp"

namespace fracschrod {

/// Every closed-form claim paired with an independent numerical value.
/// Module suites run concurrently; rows come back sorted by claim id with
/// tolerance overrides from the config applied. Solver failures propagate.
std::vector<VerificationRow> run_verification(const RunConfig& config);

}  // namespace fracschrod
