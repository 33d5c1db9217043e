#include "kcenter/variants.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "kcenter/errors.hpp"
#include "kcenter/setcover.hpp"
#include "fpa_engine.hpp"

namespace kcenter {

namespace {

void check_weights(const WeightedInstance& wi) {
    if (static_cast<int>(wi.weights.size()) != wi.graph.n)
        throw ValidationError("weight vector size does not match vertex count");
    for (std::int64_t w : wi.weights)
        if (w < 1)
            throw ValidationError("vertex weights must be at least 1");
    if (wi.budget < 1)
        throw ValidationError("weight budget must be at least 1");
}

// Cheapest possible center selection: one min-weight vertex per component.
// If even that exceeds the budget, no feasible solution exists at any radius.
void check_affordable(const WeightedInstance& wi, const DistanceOracle& oracle) {
    const int n = wi.graph.n;
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0)
            continue;
        comp[v] = comps;
        for (int u = v + 1; u < n; ++u)
            if (comp[u] < 0 && oracle.connected(v, u))
                comp[u] = comps;
        ++comps;
    }
    std::vector<std::int64_t> cheapest(comps, INT64_MAX);
    for (int v = 0; v < n; ++v)
        cheapest[comp[v]] = std::min(cheapest[comp[v]], wi.weights[v]);
    std::int64_t total = std::accumulate(cheapest.begin(), cheapest.end(), std::int64_t{0});
    if (total > wi.budget)
        throw InfeasibleError("no affordable center set: cheapest per-component choice costs " +
                              std::to_string(total) + " > budget " +
                              std::to_string(wi.budget));
}

} // namespace

Solution solve_weighted_fpa(const WeightedInstance& wi, const DistanceOracle& oracle,
                            const SolveOptions& options) {
    check_weights(wi);
    check_affordable(wi, oracle);
    detail::FpaEngineConfig cfg;
    cfg.weights = wi.weights;
    cfg.budget = wi.budget;
    cfg.region_radius_mult = 4;
    cfg.c1_cheapest_in_ball = true;
    cfg.algorithm_tag = "weighted-fpa";
    cfg.options = options;
    // No weighted baseline exists to fall back to; a capped run throws.
    return detail::run_fpa_engine(oracle, cfg);
}

Solution solve_weighted_fpa(const WeightedInstance& wi, const SolveOptions& options) {
    DistanceOracle oracle = all_pairs(wi.graph);
    return solve_weighted_fpa(wi, oracle, options);
}

Solution solve_weighted_exact(const WeightedInstance& wi, const DistanceOracle& oracle,
                              const SolveOptions& options) {
    check_weights(wi);
    if (wi.graph.n > options.exact_cap)
        throw CapacityError("exact solver limited to n <= " + std::to_string(options.exact_cap) +
                            " (got n = " + std::to_string(wi.graph.n) + ")");
    check_affordable(wi, oracle);
    const int n = wi.graph.n;
    for (std::int64_t rho : oracle.candidate_values()) {
        SetSystem system;
        system.universe.resize(n);
        std::iota(system.universe.begin(), system.universe.end(), 0);
        system.universe_cap = std::max(options.table_universe_cap, n);
        for (int v = 0; v < n; ++v) {
            CoverSet s;
            s.owner = v;
            s.weight = wi.weights[v];
            for (int u : oracle.ball(v, rho))
                s.mask |= std::uint32_t{1} << u;
            system.sets.push_back(s);
        }
        CoverTable table = build_table(system);
        CoverTable::Cover cover = table.lookup(table.full_mask());
        if (cover.feasible && cover.weight <= wi.budget) {
            Solution sol;
            for (int s : cover.set_indices)
                sol.centers.push_back(table.sets()[s].owner);
            std::sort(sol.centers.begin(), sol.centers.end());
            sol.cost = oracle.covering_cost(sol.centers);
            sol.algorithm = "weighted-exact";
            assert(sol.cost == rho);
            return sol;
        }
    }
    throw std::logic_error("radius scan exhausted on a feasible weighted instance");
}

Solution solve_weighted_exact(const WeightedInstance& wi, const SolveOptions& options) {
    DistanceOracle oracle = all_pairs(wi.graph);
    return solve_weighted_exact(wi, oracle, options);
}

PartitionSolution solve_partition(const Graph& g, const DistanceOracle& oracle, int k,
                                  std::int64_t delta, const SolveOptions& options) {
    if (delta < 1)
        throw ValidationError("delta must be at least 1");
    PartitionSolution out;
    out.delta = delta;
    out.kcenter = solve_fpa(g, oracle, k, options);

    // Nearest-center cells; ties go to the lowest center id.
    const std::vector<int>& centers = out.kcenter.centers;
    out.parts.assign(centers.size(), {});
    for (int v = 0; v < g.n; ++v) {
        std::size_t best = 0;
        for (std::size_t c = 1; c < centers.size(); ++c)
            if (oracle.dist(v, centers[c]) < oracle.dist(v, centers[best]))
                best = c;
        out.parts[best].push_back(v);
    }
    out.parts.erase(std::remove_if(out.parts.begin(), out.parts.end(),
                                   [](const std::vector<int>& p) { return p.empty(); }),
                    out.parts.end());

    out.bottleneck = 0;
    for (const auto& part : out.parts)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                out.bottleneck = std::max(out.bottleneck, oracle.dist(part[i], part[j]));
    return out;
}

PartitionSolution solve_partition(const Graph& g, int k, std::int64_t delta,
                                  const SolveOptions& options) {
    DistanceOracle oracle = all_pairs(g);
    return solve_partition(g, oracle, k, delta, options);
}

} // namespace kcenter
