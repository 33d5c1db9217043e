#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "kcenter/bitset.hpp"
#include "kcenter/graph.hpp"

namespace kcenter {

/// Sentinel for disconnected pairs. Small enough that sentinel + sentinel
/// does not overflow during relaxation.
constexpr std::int64_t kInfDist = std::numeric_limits<std::int64_t>::max() / 4;

/// Exact all-pairs shortest-path distances in distance units (edge units
/// doubled, so that half-integral scale values stay integral), plus the
/// canonical shortest path for every connected pair.
///
/// Canonical paths simulate unique shortest paths deterministically: among
/// all minimum-length u-v paths, oriented from min(u,v) to max(u,v), the one
/// whose vertex-id sequence is lexicographically smallest. The sequence is
/// rebuilt on demand by walking from the low endpoint and always taking the
/// smallest-id neighbor that stays on a shortest path; positive lengths make
/// the walk loop-free, and the suffix from any intermediate vertex is itself
/// the canonical path onward, so recomputation is stable.
class DistanceOracle {
public:
    DistanceOracle(const Graph& g, std::vector<std::int64_t> dist);

    int n() const { return n_; }
    const LengthScale& scale() const { return scale_; }

    std::int64_t dist(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    bool connected(int u, int v) const { return dist(u, v) < kInfDist; }
    const std::int64_t* row(int v) const { return &dist_[static_cast<std::size_t>(v) * n_]; }

    /// Canonical shortest path from u to v; throws ValidationError if the
    /// pair is disconnected.
    std::vector<int> canonical_path(int u, int v) const;

    /// Closed ball {u : dist(u,v) <= r}, ascending ids.
    std::vector<int> ball(int v, std::int64_t r) const;
    void ball_bits(int v, std::int64_t r, DynBits& out) const;

    /// min over S of dist(v, S); kInfDist for empty S.
    std::int64_t dist_to_set(int v, std::span<const int> s) const;

    /// Covering cost max_v dist(v, centers); kInfDist if some vertex is
    /// unreachable from every center.
    std::int64_t covering_cost(std::span<const int> centers) const;

    /// Sorted distinct finite distance values, including 0.
    std::vector<std::int64_t> candidate_values() const;

    int component_count() const { return components_; }

private:
    int n_ = 0;
    int components_ = 0;
    LengthScale scale_;
    std::vector<std::int64_t> dist_;
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj_; // distance units
};

/// Floyd-Warshall over the kernel backend; deterministic for any edge input
/// order (build_graph normalizes ordering).
DistanceOracle all_pairs(const Graph& g);

} // namespace kcenter
