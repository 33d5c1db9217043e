#include "kcenter/distance.hpp"

#include <algorithm>

#include "kcenter/errors.hpp"
#include "kcenter/kernels.hpp"

namespace kcenter {

DistanceOracle::DistanceOracle(const Graph& g, std::vector<std::int64_t> dist)
    : n_(g.n), components_(g.component_count()), scale_(g.scale), dist_(std::move(dist)),
      adj_(g.adjacency_dist_units()) {}

std::vector<int> DistanceOracle::canonical_path(int u, int v) const {
    if (!connected(u, v))
        throw ValidationError("no path between " + std::to_string(u) + " and " +
                              std::to_string(v));
    int lo = std::min(u, v), hi = std::max(u, v);
    std::vector<int> seq{lo};
    int cur = lo;
    while (cur != hi) {
        int next = -1;
        for (auto [nb, len] : adj_[cur]) { // neighbors ascend by id
            if (dist(cur, hi) == len + dist(nb, hi)) {
                next = nb;
                break;
            }
        }
        // Positive lengths guarantee progress on a shortest path.
        cur = next;
        seq.push_back(cur);
    }
    if (u > v)
        std::reverse(seq.begin(), seq.end());
    return seq;
}

std::vector<int> DistanceOracle::ball(int v, std::int64_t r) const {
    std::vector<int> out;
    const std::int64_t* d = row(v);
    for (int u = 0; u < n_; ++u)
        if (d[u] <= r)
            out.push_back(u);
    return out;
}

void DistanceOracle::ball_bits(int v, std::int64_t r, DynBits& out) const {
    kernels::active().mask_leq(row(v), static_cast<std::size_t>(n_), r, out.data());
}

std::int64_t DistanceOracle::dist_to_set(int v, std::span<const int> s) const {
    std::int64_t best = kInfDist;
    for (int c : s)
        best = std::min(best, dist(v, c));
    return best;
}

std::int64_t DistanceOracle::covering_cost(std::span<const int> centers) const {
    if (centers.empty())
        return kInfDist;
    std::vector<std::int64_t> acc(row(centers[0]), row(centers[0]) + n_);
    const auto& k = kernels::active();
    for (std::size_t i = 1; i < centers.size(); ++i)
        k.min_rows(acc.data(), row(centers[i]), acc.size());
    return k.max_reduce(acc.data(), acc.size());
}

std::vector<std::int64_t> DistanceOracle::candidate_values() const {
    std::vector<std::int64_t> vals{0};
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (connected(u, v))
                vals.push_back(dist(u, v));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

DistanceOracle all_pairs(const Graph& g) {
    const int n = g.n;
    std::vector<std::int64_t> d(static_cast<std::size_t>(n) * n, kInfDist);
    for (int v = 0; v < n; ++v)
        d[static_cast<std::size_t>(v) * n + v] = 0;
    for (const Edge& e : g.edges) {
        std::int64_t len = 2 * e.length;
        d[static_cast<std::size_t>(e.u) * n + e.v] = len;
        d[static_cast<std::size_t>(e.v) * n + e.u] = len;
    }
    const auto& kern = kernels::active();
    for (int k = 0; k < n; ++k) {
        const std::int64_t* row_k = &d[static_cast<std::size_t>(k) * n];
        for (int i = 0; i < n; ++i) {
            std::int64_t via = d[static_cast<std::size_t>(i) * n + k];
            if (via >= kInfDist)
                continue;
            kern.min_plus_relax(&d[static_cast<std::size_t>(i) * n], row_k, via,
                                static_cast<std::size_t>(n));
        }
    }
    return DistanceOracle(g, std::move(d));
}

} // namespace kcenter
