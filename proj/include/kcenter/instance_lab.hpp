#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kcenter/distance.hpp"
#include "kcenter/graph.hpp"

namespace kcenter {

/// Exact positive rational; comparisons cross-multiply in 128 bits.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

enum class Norm { l1, l2, linf };

/// A finite metric held as an exact matrix: entry(u,v) / scale. L1 and Linf
/// coordinate inputs are exact at the coordinate precision; L2 distances are
/// quantized by rounding up to three extra decimal digits, which keeps the
/// triangle inequality intact (ceil(a+b) <= ceil(a) + ceil(b)).
struct PointMetric {
    int n = 0;
    std::int64_t scale = 1;
    std::vector<std::int64_t> entries; // n*n numerators
    int doubling_dim = 2;              // user-supplied, reporting only

    std::int64_t entry(int u, int v) const {
        return entries[static_cast<std::size_t>(u) * n + v];
    }
    std::int64_t min_entry() const;
    std::int64_t max_entry() const;

    /// Exact symmetry / zero-diagonal / positivity / triangle checks.
    void validate() const;

    static PointMetric from_points(const std::vector<std::vector<Decimal>>& coords,
                                   Norm norm, int doubling_dim);
    static PointMetric from_matrix(int n, const std::vector<std::vector<Decimal>>& rows,
                                   int doubling_dim);
};

struct NetLevel {
    std::vector<int> members; // ascending ids
    Frac radius;              // net radius in rescaled-metric value; level 0 has 0
};

/// The greedy net hierarchy Y_0 = X ⊇ Y_1 ⊇ ... ⊇ Y_L used as per-scale hub
/// sets of the embedding.
struct NetHierarchy {
    int top_level = 1;          // L
    std::int64_t eps_num = 1;   // epsilon = eps_num / eps_den
    std::int64_t eps_den = 2;
    std::vector<NetLevel> levels; // size top_level + 1
};

/// An embedded graph together with the bookkeeping that ties its integer
/// lengths back to the (rescaled) metric: one edge unit is worth
/// unit_num / unit_den in rescaled-metric value, and the rescaled metric
/// distance of a pair is metric_num(u,v) / metric_den.
struct EmbedResult {
    Graph graph;
    NetHierarchy hierarchy;
    int doubling_dim = 2; // carried over from the metric, reporting only
    std::int64_t unit_num = 1;
    std::int64_t unit_den = 1;
    std::int64_t metric_den = 1;
    std::vector<std::int64_t> metric_num; // n*n

    std::int64_t metric_entry(int u, int v) const {
        return metric_num[static_cast<std::size_t>(u) * graph.n + v];
    }
};

/// Builds a graph whose shortest-path distances sandwich the metric within a
/// (1+eps) factor: rescale so the minimum distance is 2/(1+eps), build greedy
/// nets per scale, and connect vertices co-resident at level i with edges of
/// length (1 + eps(1 - i/L)) times their metric distance (keeping the
/// largest-level edge per pair). The distortion certificate
///   dist_X <= dist_G <= (1+eps) dist_X
/// is verified exactly before returning; failure is a hard error. Edge
/// lengths are emitted as exact integers over a common denominator, so no
/// rounding is involved at any point.
EmbedResult embed_doubling(const PointMetric& metric, std::int64_t eps_num,
                           std::int64_t eps_den);

struct HierarchyCertificate {
    struct LevelReport {
        int level = 0;
        int size = 0;
        int sparsity = 0;        // measured as an SPC at scale 2^level
        bool within_bound = true; // vs (128(1+eps)^2 L / eps)^d
    };
    // Pairs whose canonical shortest path misses every hub of the level
    // matching their distance band (2^i, 2^{i+1}].
    std::vector<std::tuple<int, int, int>> violations; // (u, v, level)
    std::vector<LevelReport> levels;
    bool pass() const { return violations.empty(); }
};

/// Checks that every pair with dist_G in (2^i, 2^{i+1}] routes through a
/// level-i hub and measures the local sparsity of each level.
HierarchyCertificate certify_hub_hierarchy(const EmbedResult& embed,
                                           const DistanceOracle& oracle);
HierarchyCertificate certify_hub_hierarchy(const EmbedResult& embed);

/// Exact check that each Y_i is a radius-rho_i cover and packing of Y_{i-1}.
bool net_levels_valid(const EmbedResult& embed);

/// Same topology, every length 1: k-Center cost on the result is 1 iff the
/// input has a dominating set of size <= k, and at least 2 otherwise.
Graph reduce_dominating_set(const Graph& g);

/// Random connected 3-regular graph with unit lengths (pairing model with
/// rejection); deterministic under seed.
Graph gen_cubic_instance(int n, std::uint64_t seed);

/// w x h lattice with unit lengths.
Graph gen_grid(int w, int h);

/// Spanning tree plus extra edges, integer lengths in [1, max_len].
Graph gen_random_connected(int n, int m, int max_len, std::uint64_t seed);

/// Point file: "points n dim {l1|l2|linf}" + n coordinate lines, or
/// "matrix n" + n rows. '#' starts a comment.
PointMetric parse_point_file(std::istream& in, int doubling_dim);
PointMetric load_point_file(const std::string& path, int doubling_dim);

} // namespace kcenter
