#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcenter/solvers.hpp"

namespace kcenter {

/// One solver run, flattened for output. Costs are descaled exact decimals;
/// the ratio is rendered to six fixed places. Wall time is filled only when
/// timings were requested, so default reports are byte-identical across
/// reruns with the same flags and seed.
struct RunReport {
    static constexpr const char* kSchemaVersion = "v1";

    std::string instance;
    int n = 0;
    int m = 0;
    std::string algorithm;
    std::int64_t k = 0;
    std::optional<std::int64_t> delta;
    std::string cost;
    std::vector<int> centers;
    std::optional<std::string> oracle_cost;
    std::optional<std::string> ratio; // needs oracle_cost
    bool fallback = false;

    // Guessing-solver instrumentation.
    std::optional<std::uint64_t> guesses;
    struct SpcStats {
        std::string scale; // descaled r
        int hubs = 0;
        int sparsity = 0;
        int clusters = 0;
    };
    std::optional<SpcStats> accepted_scale;
    std::vector<ScaleStats> scale_log; // raw per-scale log (json output only)

    std::optional<std::vector<std::vector<int>>> parts;
    std::optional<double> wall_ms;
};

/// Renders "cost / oracle" to six fixed decimal places (round half up).
std::string format_ratio(std::int64_t cost, std::int64_t oracle_cost);

std::string render_table(const RunReport& report, const LengthScale& scale);
std::string render_json(const RunReport& report, const LengthScale& scale);

} // namespace kcenter
