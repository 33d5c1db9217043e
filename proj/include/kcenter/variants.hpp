#pragma once

#include <cstdint>
#include <vector>

#include "kcenter/solvers.hpp"

namespace kcenter {

/// Vertex-weighted instance: centers cost their weight and the total must
/// stay within the budget.
struct WeightedInstance {
    Graph graph;
    std::vector<std::int64_t> weights; // per vertex, all >= 1
    std::int64_t budget = 0;           // k
};

/// Weighted variant of the guessing solver. Mirrors solve_fpa with three
/// substitutions: C1 takes a cheapest vertex of B_hub(r) per guessed hub, C2
/// takes the min-weight vertex per uncovered cluster, C3 comes from the
/// weighted cover table, and feasibility uses balls of radius 4r plus the
/// weight budget. Within 2x the weighted optimum on unpruned runs.
Solution solve_weighted_fpa(const WeightedInstance& wi, const SolveOptions& options = {});
Solution solve_weighted_fpa(const WeightedInstance& wi, const DistanceOracle& oracle,
                            const SolveOptions& options = {});

/// Exact weighted oracle for small n (candidate radii + weighted cover
/// table over universe V).
Solution solve_weighted_exact(const WeightedInstance& wi, const SolveOptions& options = {});
Solution solve_weighted_exact(const WeightedInstance& wi, const DistanceOracle& oracle,
                              const SolveOptions& options = {});

/// Partition of the vertices into at most k parts, each a clique in the
/// bottleneck graph H(c); delta is the radius bound of the target graph
/// family.
struct PartitionSolution {
    std::vector<std::vector<int>> parts; // disjoint, union = V
    std::int64_t bottleneck = 0;         // max intra-part distance, distance units
    std::int64_t delta = 1;
    Solution kcenter; // the underlying center solution
};

/// Reduction to k-Center: solve with the guessing solver, then cut the
/// graph into nearest-center cells. The bottleneck is within 3*delta of the
/// partition optimum for families of radius delta.
PartitionSolution solve_partition(const Graph& g, int k, std::int64_t delta,
                                  const SolveOptions& options = {});
PartitionSolution solve_partition(const Graph& g, const DistanceOracle& oracle, int k,
                                  std::int64_t delta, const SolveOptions& options = {});

} // namespace kcenter
