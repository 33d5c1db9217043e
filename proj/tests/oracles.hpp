#pragma once

// Independent brute-force oracles used by the tests. These deliberately
// avoid the library's algorithmic paths: distances come from edge relaxation
// to a fixpoint, covers and centers from exhaustive enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "kcenter/distance.hpp"
#include "kcenter/graph.hpp"
#include "kcenter/setcover.hpp"

namespace kcenter::testing {

// Bellman-Ford-style sweeps over the edge list until no distance improves.
inline std::vector<std::int64_t> fixpoint_apsp(const Graph& g) {
    const int n = g.n;
    std::vector<std::int64_t> d(static_cast<std::size_t>(n) * n, kInfDist);
    for (int v = 0; v < n; ++v)
        d[static_cast<std::size_t>(v) * n + v] = 0;
    auto at = [&](int u, int v) -> std::int64_t& {
        return d[static_cast<std::size_t>(u) * n + v];
    };
    for (const Edge& e : g.edges) {
        at(e.u, e.v) = std::min(at(e.u, e.v), 2 * e.length);
        at(e.v, e.u) = at(e.u, e.v);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < n; ++s)
            for (const Edge& e : g.edges) {
                std::int64_t len = 2 * e.length;
                if (at(s, e.u) < kInfDist && at(s, e.u) + len < at(s, e.v)) {
                    at(s, e.v) = at(s, e.u) + len;
                    changed = true;
                }
                if (at(s, e.v) < kInfDist && at(s, e.v) + len < at(s, e.u)) {
                    at(s, e.u) = at(s, e.v) + len;
                    changed = true;
                }
            }
    }
    return d;
}

// Smallest hitting set for a family of vertex sets, by subset enumeration.
inline int brute_min_hitting_set(const std::vector<std::vector<int>>& sets, int n) {
    if (sets.empty())
        return 0;
    std::vector<std::uint64_t> masks;
    for (const auto& s : sets) {
        std::uint64_t m = 0;
        for (int v : s)
            m |= std::uint64_t{1} << v;
        masks.push_back(m);
    }
    for (int size = 1; size <= n; ++size) {
        // all subsets of {0..n-1} of this size
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            std::uint64_t pick = 0;
            for (int i : idx)
                pick |= std::uint64_t{1} << i;
            bool hits_all = true;
            for (std::uint64_t m : masks)
                if ((m & pick) == 0) {
                    hits_all = false;
                    break;
                }
            if (hits_all)
                return size;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return n;
}

// Minimum weight over all subcollections covering `target`; -1 if none.
inline std::int64_t brute_min_cover_weight(const SetSystem& system, std::uint32_t target) {
    std::int64_t best = -1;
    const int s = static_cast<int>(system.sets.size());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << s); ++pick) {
        std::uint32_t covered = 0;
        std::int64_t w = 0;
        for (int i = 0; i < s; ++i)
            if (pick >> i & 1) {
                covered |= system.sets[i].mask;
                w += system.sets[i].weight;
            }
        if ((covered & target) == target && (best < 0 || w < best))
            best = w;
    }
    return best;
}

// Optimal k-center cost by enumerating center subsets of size <= k.
inline std::int64_t brute_kcenter_cost(const DistanceOracle& oracle, int k) {
    const int n = oracle.n();
    std::int64_t best = kInfDist;
    for (std::uint32_t pick = 1; pick < (1u << n); ++pick) {
        if (std::popcount(pick) > k)
            continue;
        std::vector<int> centers;
        for (int v = 0; v < n; ++v)
            if (pick >> v & 1)
                centers.push_back(v);
        best = std::min(best, oracle.covering_cost(centers));
    }
    return best;
}

// Optimal weighted k-center cost over affordable center sets; -1 infeasible.
inline std::int64_t brute_weighted_kcenter_cost(const DistanceOracle& oracle,
                                                const std::vector<std::int64_t>& weights,
                                                std::int64_t budget) {
    const int n = oracle.n();
    std::int64_t best = -1;
    for (std::uint32_t pick = 1; pick < (1u << n); ++pick) {
        std::int64_t w = 0;
        std::vector<int> centers;
        for (int v = 0; v < n; ++v)
            if (pick >> v & 1) {
                w += weights[v];
                centers.push_back(v);
            }
        if (w > budget)
            continue;
        std::int64_t cost = oracle.covering_cost(centers);
        if (cost < kInfDist && (best < 0 || cost < best))
            best = cost;
    }
    return best;
}

// Smallest dominating set size by subset enumeration.
inline int brute_min_dominating_set(const Graph& g) {
    const int n = g.n;
    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v)
        closed[v] = std::uint32_t{1} << v;
    for (const Edge& e : g.edges) {
        closed[e.u] |= std::uint32_t{1} << e.v;
        closed[e.v] |= std::uint32_t{1} << e.u;
    }
    int best = n;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t pick = 1; pick <= full; ++pick) {
        std::uint32_t covered = 0;
        for (int v = 0; v < n; ++v)
            if (pick >> v & 1)
                covered |= closed[v];
        if (covered == full)
            best = std::min(best, std::popcount(pick));
    }
    return best;
}

// True if `centers` dominates the graph (every vertex in or adjacent).
inline bool is_dominating_set(const Graph& g, const std::vector<int>& centers) {
    const int n = g.n;
    std::vector<bool> dominated(n, false);
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (int c : centers) {
        dominated[c] = true;
        for (int nb : adj[c])
            dominated[nb] = true;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
}

// Greedy 2-approximate vertex cover (take both endpoints of uncovered edges).
inline std::vector<int> greedy_vertex_cover(const Graph& g) {
    std::vector<bool> in(g.n, false);
    for (const Edge& e : g.edges)
        if (!in[e.u] && !in[e.v]) {
            in[e.u] = true;
            in[e.v] = true;
        }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (in[v])
            out.push_back(v);
    return out;
}

} // namespace kcenter::testing
