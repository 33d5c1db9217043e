#include <doctest.h>

#include <cmath>
#include <random>

#include "kcenter/instance_lab.hpp"
#include "kcenter/spc.hpp"
#include "oracles.hpp"

using namespace kcenter;
namespace kt = kcenter::testing;

TEST_CASE("scale_paths: single unit edge") {
    Graph g = build_graph_unit_scale(2, {{0, 1, 1}});
    DistanceOracle o = all_pairs(g);
    // any r with r < dist <= 2r qualifies the edge; r = 0.6 in original units
    // corresponds to the scaled band below
    std::int64_t r = 1; // dist(0,1) = 2 scaled, (1, 2] contains it
    auto sets = scale_paths(o, r);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0] == std::vector<int>{0, 1});

    CHECK(scale_paths(o, g.dist_units("2")).empty()); // band (2, 4], nothing there
}

TEST_CASE("scale_paths: path graph at r=1") {
    Graph g = build_graph_unit_scale(3, {{0, 1, 1}, {1, 2, 1}});
    DistanceOracle o = all_pairs(g);
    auto sets = scale_paths(o, g.dist_units("1"));
    REQUIRE(sets.size() == 1); // only dist(0,2) = 2 lies in (1, 2]
    CHECK(sets[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("compute_spc: trivial cases") {
    Graph g = build_graph_unit_scale(3, {{0, 1, 1}, {1, 2, 1}});
    DistanceOracle o = all_pairs(g);

    ShortestPathCover none = compute_spc(o, g.dist_units("3"));
    CHECK(none.hubs.empty());
    CHECK(none.measured_sparsity == 0);

    ShortestPathCover one = compute_spc(o, g.dist_units("1"));
    CHECK(one.hubs == std::vector<int>{0}); // all three cover; lowest id wins
    CHECK(one.covered_paths == 1);
}

TEST_CASE("compute_spc: valid hitting set with greedy quality bound") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 10;
        Graph g = gen_random_connected(n, 12 + static_cast<int>(rng() % 8), 4, rng());
        DistanceOracle o = all_pairs(g);
        for (std::int64_t value : o.candidate_values()) {
            std::int64_t r = value / 2;
            ShortestPathCover spc = compute_spc(o, r);
            CHECK(spc_is_valid(o, spc.hubs, r));
            CHECK(spc.measured_sparsity == local_sparsity(o, spc.hubs, r));

            auto sets = scale_paths(o, r);
            int optimum = kt::brute_min_hitting_set(sets, n);
            double bound = (1.0 + std::log(std::max(2, n))) * optimum;
            CHECK(static_cast<double>(spc.hubs.size()) <= bound);

            // determinism
            CHECK(compute_spc(o, r).hubs == spc.hubs);
        }
    }
}

TEST_CASE("local_sparsity basics") {
    Graph g = build_graph_unit_scale(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    DistanceOracle o = all_pairs(g);
    CHECK(local_sparsity(o, std::vector<int>{}, 2) == 0);
    CHECK(local_sparsity(o, std::vector<int>{1}, 0) == 1); // the hub's own ball
}

TEST_CASE("compute_clusters: all vertices near hubs means zero clusters") {
    Graph g = build_graph_unit_scale(3, {{0, 1, 1}, {1, 2, 1}});
    DistanceOracle o = all_pairs(g);
    ShortestPathCover middle;
    middle.r = g.dist_units("1");
    middle.hubs = {1}; // valid: the only (r, 2r] path is {0,1,2}
    ClusterSet cs = compute_clusters(o, middle);
    CHECK(cs.clusters.empty());
    CHECK(cs.non_cluster == std::vector<int>{0, 1, 2});

    // the greedy cover picks hub 0 instead, leaving 2 as a far vertex
    ShortestPathCover greedy = compute_spc(o, g.dist_units("1"));
    ClusterSet cs2 = compute_clusters(o, greedy);
    CHECK(cs2.clusters.size() == 1);
    CHECK(cs2.clusters[0] == std::vector<int>{2});
    CHECK(cs2.non_cluster == std::vector<int>{0, 1});
}

TEST_CASE("compute_clusters: star with empty hub set") {
    // 4 unit spokes around center 0, lengths scaled x10 so that an r
    // equivalent to 0.4 spoke-lengths is an exact integer scale.
    Graph g = build_graph_unit_scale(5, {{0, 1, 10}, {0, 2, 10}, {0, 3, 10}, {0, 4, 10}});
    DistanceOracle o = all_pairs(g);
    std::int64_t r = g.dist_units("4"); // 0.4 of a spoke
    ShortestPathCover spc = compute_spc(o, r);
    CHECK(spc.hubs.empty()); // band (4, 8] holds no distance (spokes are 10)
    ClusterSet cs = compute_clusters(o, spc);
    CHECK(cs.clusters.size() == 5); // every vertex is its own cluster
    CHECK(cs.non_cluster.empty());
}

TEST_CASE("compute_clusters: structural properties on random instances") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 9;
        Graph g = gen_random_connected(n, 11 + static_cast<int>(rng() % 6), 5, rng());
        DistanceOracle o = all_pairs(g);
        for (std::int64_t value : o.candidate_values()) {
            std::int64_t r = value / 2;
            ShortestPathCover spc = compute_spc(o, r);
            ClusterSet cs = compute_clusters(o, spc); // throws if any property fails

            // explicit re-check, independent of the library's own verification
            for (const auto& cluster : cs.clusters)
                for (int u : cluster) {
                    CHECK(o.dist_to_set(u, spc.hubs) > r);
                    for (int w : cluster)
                        CHECK(o.dist(u, w) <= r);
                }
            for (std::size_t a = 0; a < cs.clusters.size(); ++a)
                for (std::size_t b = a + 1; b < cs.clusters.size(); ++b)
                    for (int u : cs.clusters[a])
                        for (int w : cs.clusters[b])
                            CHECK(o.dist(u, w) > 2 * r);
            for (int v : cs.non_cluster)
                CHECK(o.dist_to_set(v, spc.hubs) <= r);

            // no W-pair sits in the (r, 2r] band
            std::vector<int> far;
            for (const auto& cluster : cs.clusters)
                far.insert(far.end(), cluster.begin(), cluster.end());
            for (int u : far)
                for (int w : far) {
                    std::int64_t d = o.dist(u, w);
                    CHECK(!(d > r && d <= 2 * r));
                }
        }
    }
}

TEST_CASE("compute_clusters rejects an invalid hub set") {
    // Path 0-1-2-3 with r = 1 and a bogus empty hub set: W = V chains into
    // one class whose diameter is 3 > r, so the verification must throw.
    Graph g = build_graph_unit_scale(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    DistanceOracle o = all_pairs(g);
    ShortestPathCover bogus;
    bogus.r = g.dist_units("1");
    bogus.hubs = {};
    CHECK_THROWS_AS(compute_clusters(o, bogus), ValidationError);
}

TEST_CASE("compute_spc is independent of edge input order") {
    std::vector<std::tuple<int, int, std::int64_t>> edges{
        {0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {0, 4, 3}, {1, 3, 2}};
    Graph a = build_graph_unit_scale(5, edges);
    std::reverse(edges.begin(), edges.end());
    Graph b = build_graph_unit_scale(5, edges);
    DistanceOracle oa = all_pairs(a);
    DistanceOracle ob = all_pairs(b);
    for (std::int64_t value : oa.candidate_values()) {
        ShortestPathCover sa = compute_spc(oa, value / 2);
        ShortestPathCover sb = compute_spc(ob, value / 2);
        CHECK(sa.hubs == sb.hubs);
        CHECK(sa.measured_sparsity == sb.measured_sparsity);
    }
}

TEST_CASE("r=0 makes every vertex a singleton cluster") {
    Graph g = build_graph_unit_scale(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}});
    DistanceOracle o = all_pairs(g);
    ShortestPathCover spc = compute_spc(o, 0);
    CHECK(spc.hubs.empty());
    ClusterSet cs = compute_clusters(o, spc);
    CHECK(cs.clusters.size() == 4);
    for (const auto& c : cs.clusters)
        CHECK(c.size() == 1);
}
