#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcenter/distance.hpp"
#include "kcenter/graph.hpp"

namespace kcenter {

struct SolveOptions {
    /// Most hubs the guess enumeration will take on (3^cap assignments).
    int hub_enumeration_cap = 20;
    /// Cover-table universe cap (2^cap entries).
    int table_universe_cap = 24;
    /// Largest n the exact solver accepts.
    int exact_cap = 18;
    /// Wall-clock budget for the scale scan; 0 means unlimited. Exceeding
    /// it is a budget event like the enumeration cap.
    std::int64_t time_budget_ms = 0;
    /// On budget exhaustion return the bottleneck baseline instead of
    /// throwing (guarantee degrades to 2).
    bool fallback = false;
    /// Guess evaluation is split over this many workers; results are
    /// independent of the value.
    int threads = 1;
};

/// Per-scale instrumentation of the guessing solver.
struct ScaleStats {
    std::int64_t r = 0;     // distance units
    int hub_count = 0;
    int sparsity = 0;       // measured local sparsity of the cover
    int cluster_count = 0;
    bool skipped = false;   // |spc(r)| > k * sparsity
    bool over_cap = false;  // |spc(r)| > enumeration cap (budget event)
    std::uint64_t guesses = 0;
    bool accepted = false;
};

/// Accepted-guess provenance: the scale, the hub set, the guessed hub
/// subsets, the three center sets, and the regions they cover.
struct FpaTrace {
    std::int64_t r = 0;
    int region_radius_mult = 3;
    std::vector<int> hubs;
    std::vector<int> guessed_h;       // H
    std::vector<int> guessed_h_prime; // H'
    std::vector<int> c1, c2, c3;
    std::vector<int> r1, r2, r3;      // vertices covered by each center set
};

struct Solution {
    std::vector<int> centers; // ascending ids
    std::int64_t cost = 0;    // max_v dist(v, centers), distance units
    std::string algorithm;
    bool fallback = false;
    std::uint64_t guess_evaluations = 0; // across all visited scales
    std::vector<ScaleStats> scales;
    std::optional<FpaTrace> trace;
};

/// The guessing 3/2-approximation: try candidate scales r = dist/2 in
/// increasing order; per scale compute the shortest path cover and clusters,
/// dismiss the scale when the hub count exceeds k times the measured
/// sparsity, and otherwise try every assignment of hubs to {H, H', neither}.
/// Each assignment induces centers C1 = H, C2 = one vertex per cluster not
/// yet covered, C3 = a minimum set cover pulled from a pre-built table, and
/// the first (lowest counter at the smallest scale) assignment whose centers
/// fit the budget and cover every vertex with balls of radius 3r wins.
///
/// On runs that never hit the enumeration cap the result is within 3/2 of
/// the optimum. Throws InfeasibleError when the component count exceeds k
/// and BudgetExceededError when every contributing scale was capped (unless
/// options.fallback requests the bottleneck baseline).
Solution solve_fpa(const Graph& g, int k, const SolveOptions& options = {});
Solution solve_fpa(const Graph& g, const DistanceOracle& oracle, int k,
                   const SolveOptions& options = {});

/// Bottleneck-threshold 2-approximation: for each candidate radius pick
/// greedily the lowest uncovered vertex and discard everything within twice
/// the radius; the first radius needing at most k centers is accepted.
Solution solve_hs(const Graph& g, int k);
Solution solve_hs(const Graph& g, const DistanceOracle& oracle, int k);

/// Exact oracle for small n: the first candidate radius whose balls admit a
/// cover of size <= k (decided by the cover table over universe V) is the
/// optimum.
Solution solve_exact(const Graph& g, int k, const SolveOptions& options = {});
Solution solve_exact(const Graph& g, const DistanceOracle& oracle, int k,
                     const SolveOptions& options = {});

} // namespace kcenter
