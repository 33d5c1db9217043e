#pragma once

// Internal: the scale-guessing engine shared by the plain and the weighted
// solver. Not part of the public headers.

#include <cstdint>
#include <vector>

#include "kcenter/distance.hpp"
#include "kcenter/solvers.hpp"

namespace kcenter::detail {

struct FpaEngineConfig {
    std::vector<std::int64_t> weights; // per vertex, all >= 1
    std::int64_t budget = 0;           // max total center weight
    int region_radius_mult = 3;        // coverage tested with balls of mult*r
    bool c1_cheapest_in_ball = false;  // C1 takes argmin-weight of B_hub(r) instead of the hub
    const char* algorithm_tag = "fpa";
    SolveOptions options;
};

/// Runs the scale scan. Throws BudgetExceededError when some scale exceeded
/// the enumeration cap and none accepted; throws std::logic_error if the
/// scan ends with no capped scale and no acceptance (cannot happen on valid
/// input).
Solution run_fpa_engine(const DistanceOracle& oracle, const FpaEngineConfig& cfg);

} // namespace kcenter::detail
