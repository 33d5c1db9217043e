#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kcenter/distance.hpp"

namespace kcenter {

/// A shortest path cover for one scale r: a hub set hitting every canonical
/// shortest path of length in (r, 2r], together with its measured local
/// sparsity (the maximum number of hubs in any ball of radius 2r).
struct ShortestPathCover {
    std::int64_t r = 0;            // distance units
    std::vector<int> hubs;         // ascending ids
    std::size_t covered_paths = 0; // qualifying connected pairs
    int measured_sparsity = 0;
};

/// Far-from-hub vertices grouped into clusters: each cluster has diameter
/// <= r, distinct clusters are more than 2r apart, and every non-cluster
/// vertex is within r of a hub.
struct ClusterSet {
    std::vector<std::vector<int>> clusters; // each ascending; ordered by first member
    std::vector<int> non_cluster;           // ascending
};

/// Vertex sets of canonical shortest paths with length in (r, 2r], one per
/// qualifying unordered connected pair, deduplicated and in lexicographic
/// order.
std::vector<std::vector<int>> scale_paths(const DistanceOracle& oracle, std::int64_t r);

/// Greedy max-coverage hitting set for scale_paths(oracle, r): repeatedly
/// pick the vertex on the most uncovered qualifying paths, lowest id on
/// ties. Deterministic; measured sparsity is filled in.
ShortestPathCover compute_spc(const DistanceOracle& oracle, std::int64_t r);

/// max over v of |B_v(2r) ∩ hubs|.
int local_sparsity(const DistanceOracle& oracle, std::span<const int> hubs, std::int64_t r);

/// max over v of |B_v(radius) ∩ hubs| with an explicit ball radius.
int max_ball_occupancy(const DistanceOracle& oracle, std::span<const int> hubs,
                       std::int64_t radius);

/// True iff every canonical path of length in (r, 2r] contains a hub.
bool spc_is_valid(const DistanceOracle& oracle, std::span<const int> hubs, std::int64_t r);

/// W = {v : dist(v, hubs) > r} partitioned into equivalence classes of the
/// relation "dist <= r" on W. All structural properties (cluster diameter
/// <= r, separation > 2r, non-cluster vertices within r of a hub, and the
/// empty (r, 2r] distance band inside W) are re-verified exactly before
/// returning; a violation means the input cover is not a valid SPC and
/// raises ValidationError.
ClusterSet compute_clusters(const DistanceOracle& oracle, const ShortestPathCover& spc);

} // namespace kcenter
