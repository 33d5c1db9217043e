#include "kcenter/spc.hpp"

#include <algorithm>
#include <numeric>

#include "kcenter/errors.hpp"

namespace kcenter {

std::vector<std::vector<int>> scale_paths(const DistanceOracle& oracle, std::int64_t r) {
    const int n = oracle.n();
    std::vector<std::vector<int>> sets;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::int64_t d = oracle.dist(u, v);
            if (d > r && d <= 2 * r) {
                std::vector<int> path = oracle.canonical_path(u, v);
                std::sort(path.begin(), path.end());
                sets.push_back(std::move(path));
            }
        }
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

ShortestPathCover compute_spc(const DistanceOracle& oracle, std::int64_t r) {
    const int n = oracle.n();
    ShortestPathCover cover;
    cover.r = r;

    std::size_t pairs = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::int64_t d = oracle.dist(u, v);
            if (d > r && d <= 2 * r)
                ++pairs;
        }
    cover.covered_paths = pairs;

    std::vector<std::vector<int>> sets = scale_paths(oracle, r);
    std::vector<bool> covered(sets.size(), false);
    std::size_t remaining = sets.size();
    while (remaining > 0) {
        std::vector<std::size_t> gain(n, 0);
        for (std::size_t s = 0; s < sets.size(); ++s)
            if (!covered[s])
                for (int v : sets[s])
                    ++gain[v];
        int best = 0;
        for (int v = 1; v < n; ++v)
            if (gain[v] > gain[best])
                best = v; // ties keep the lowest id
        cover.hubs.push_back(best);
        for (std::size_t s = 0; s < sets.size(); ++s)
            if (!covered[s] && std::binary_search(sets[s].begin(), sets[s].end(), best)) {
                covered[s] = true;
                --remaining;
            }
    }
    std::sort(cover.hubs.begin(), cover.hubs.end());
    cover.measured_sparsity = local_sparsity(oracle, cover.hubs, r);
    return cover;
}

int max_ball_occupancy(const DistanceOracle& oracle, std::span<const int> hubs,
                       std::int64_t radius) {
    int best = 0;
    for (int v = 0; v < oracle.n(); ++v) {
        int count = 0;
        for (int h : hubs)
            if (oracle.dist(v, h) <= radius)
                ++count;
        best = std::max(best, count);
    }
    return best;
}

int local_sparsity(const DistanceOracle& oracle, std::span<const int> hubs, std::int64_t r) {
    return max_ball_occupancy(oracle, hubs, 2 * r);
}

bool spc_is_valid(const DistanceOracle& oracle, std::span<const int> hubs, std::int64_t r) {
    std::vector<bool> is_hub(oracle.n(), false);
    for (int h : hubs)
        is_hub[h] = true;
    for (int u = 0; u < oracle.n(); ++u)
        for (int v = u + 1; v < oracle.n(); ++v) {
            std::int64_t d = oracle.dist(u, v);
            if (d > r && d <= 2 * r) {
                bool hit = false;
                for (int x : oracle.canonical_path(u, v))
                    if (is_hub[x]) {
                        hit = true;
                        break;
                    }
                if (!hit)
                    return false;
            }
        }
    return true;
}

ClusterSet compute_clusters(const DistanceOracle& oracle, const ShortestPathCover& spc) {
    const int n = oracle.n();
    const std::int64_t r = spc.r;

    std::vector<int> far; // W
    std::vector<bool> in_w(n, false);
    for (int v = 0; v < n; ++v) {
        if (oracle.dist_to_set(v, spc.hubs) > r) {
            far.push_back(v);
            in_w[v] = true;
        }
    }

    // Union-find over W pairs at distance <= r. For a valid cover no W pair
    // sits in the (r, 2r] band, which makes the relation transitive, so the
    // components below are exactly its equivalence classes.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < far.size(); ++i)
        for (std::size_t j = i + 1; j < far.size(); ++j)
            if (oracle.dist(far[i], far[j]) <= r)
                parent[find(far[i])] = find(far[j]);

    ClusterSet out;
    std::vector<int> root_to_cluster(n, -1);
    for (int v : far) { // ascending, so clusters order by first member
        int root = find(v);
        if (root_to_cluster[root] < 0) {
            root_to_cluster[root] = static_cast<int>(out.clusters.size());
            out.clusters.emplace_back();
        }
        out.clusters[root_to_cluster[root]].push_back(v);
    }
    for (int v = 0; v < n; ++v)
        if (!in_w[v])
            out.non_cluster.push_back(v);

    // Re-verify the structure before handing it out.
    for (const auto& cluster : out.clusters)
        for (std::size_t i = 0; i < cluster.size(); ++i)
            for (std::size_t j = i + 1; j < cluster.size(); ++j)
                if (oracle.dist(cluster[i], cluster[j]) > r)
                    throw ValidationError("invalid SPC: cluster diameter exceeds scale r");
    for (std::size_t a = 0; a < out.clusters.size(); ++a)
        for (std::size_t b = a + 1; b < out.clusters.size(); ++b)
            for (int u : out.clusters[a])
                for (int w : out.clusters[b])
                    if (oracle.dist(u, w) <= 2 * r)
                        throw ValidationError("invalid SPC: clusters closer than 2r");
    for (int v : out.non_cluster)
        if (oracle.dist_to_set(v, spc.hubs) > r)
            throw ValidationError("invalid SPC: non-cluster vertex farther than r from hubs");
    for (std::size_t i = 0; i < far.size(); ++i)
        for (std::size_t j = i + 1; j < far.size(); ++j) {
            std::int64_t d = oracle.dist(far[i], far[j]);
            if (d > r && d <= 2 * r)
                throw ValidationError("invalid SPC: far vertices at distance in (r, 2r]");
        }
    return out;
}

} // namespace kcenter
