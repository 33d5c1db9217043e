#include <doctest.h>

#include <numeric>
#include <random>

#include "kcenter/instance_lab.hpp"
#include "kcenter/variants.hpp"
#include "oracles.hpp"

using namespace kcenter;
namespace kt = kcenter::testing;

namespace {

WeightedInstance random_weighted(std::mt19937_64& rng, int n, int max_w, std::int64_t budget) {
    WeightedInstance wi;
    wi.graph = gen_random_connected(n, n - 1 + static_cast<int>(rng() % n), 4, rng());
    wi.weights.resize(n);
    for (auto& w : wi.weights)
        w = 1 + static_cast<std::int64_t>(rng() % max_w);
    wi.budget = budget;
    return wi;
}

} // namespace

TEST_CASE("solve_weighted_exact: trivial cases") {
    WeightedInstance wi;
    wi.graph = build_graph_unit_scale(1, {});
    wi.weights = {2};
    wi.budget = 3;
    CHECK(solve_weighted_exact(wi).cost == 0);

    wi.weights = {5};
    wi.budget = 3;
    CHECK_THROWS_AS(solve_weighted_exact(wi), InfeasibleError);
}

TEST_CASE("solve_weighted_exact: unit weights equal the plain oracle") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 5 + static_cast<int>(rng() % 5);
        WeightedInstance wi = random_weighted(rng, n, 1, 2); // all weights 1
        Solution weighted = solve_weighted_exact(wi);
        Solution plain = solve_exact(wi.graph, static_cast<int>(wi.budget));
        CHECK(weighted.cost == plain.cost);
    }
}

TEST_CASE("solve_weighted_exact matches affordable-set enumeration") {
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 5 + static_cast<int>(rng() % 6); // up to 10
        std::int64_t budget = 2 + static_cast<std::int64_t>(rng() % 5);
        WeightedInstance wi = random_weighted(rng, n, 3, budget);
        DistanceOracle o = all_pairs(wi.graph);
        std::int64_t brute = kt::brute_weighted_kcenter_cost(o, wi.weights, budget);
        if (brute < 0) {
            CHECK_THROWS_AS(solve_weighted_exact(wi, o), InfeasibleError);
        } else {
            CHECK(solve_weighted_exact(wi, o).cost == brute);
        }
    }
}

TEST_CASE("solve_weighted_fpa: single affordable vertex") {
    WeightedInstance wi;
    wi.graph = build_graph_unit_scale(1, {});
    wi.weights = {2};
    wi.budget = 2;
    Solution sol = solve_weighted_fpa(wi);
    CHECK(sol.cost == 0);
    CHECK(sol.centers == std::vector<int>{0});
}

TEST_CASE("solve_weighted_fpa: every weight above the budget is infeasible") {
    WeightedInstance wi;
    wi.graph = build_graph_unit_scale(2, {{0, 1, 1}});
    wi.weights = {7, 9};
    wi.budget = 6;
    CHECK_THROWS_AS(solve_weighted_fpa(wi), InfeasibleError);
}

TEST_CASE("solve_weighted_fpa: budget and ratio on random instances") {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 5 + static_cast<int>(rng() % 6); // up to 10
        std::int64_t budget = 2 + static_cast<std::int64_t>(rng() % 5); // up to 6
        WeightedInstance wi = random_weighted(rng, n, 3, budget);
        DistanceOracle o = all_pairs(wi.graph);
        std::int64_t opt = kt::brute_weighted_kcenter_cost(o, wi.weights, budget);
        if (opt < 0)
            continue;
        Solution sol = solve_weighted_fpa(wi, o);
        std::int64_t total = 0;
        for (int c : sol.centers)
            total += wi.weights[c];
        CHECK(total <= budget);
        CHECK(sol.cost <= 2 * opt);
        CHECK(o.covering_cost(sol.centers) == sol.cost);
    }
}

TEST_CASE("solve_weighted_fpa: all-ones behaves like a k-center relaxation") {
    std::mt19937_64 rng(83);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 5 + static_cast<int>(rng() % 5);
        WeightedInstance wi = random_weighted(rng, n, 1, 2);
        DistanceOracle o = all_pairs(wi.graph);
        Solution sol = solve_weighted_fpa(wi, o);
        Solution exact = solve_exact(wi.graph, o, 2);
        CHECK(static_cast<std::int64_t>(sol.centers.size()) <= wi.budget);
        CHECK(sol.cost <= 2 * exact.cost);
    }
}

TEST_CASE("solve_partition: k = n gives singleton parts") {
    Graph g = build_graph_unit_scale(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 2}});
    PartitionSolution ps = solve_partition(g, 4, 1);
    CHECK(ps.parts.size() == 4);
    CHECK(ps.bottleneck == 0);
}

TEST_CASE("solve_partition: two far clumps split apart") {
    // two unit-diameter triangles joined by one very long edge
    Graph g = build_graph_unit_scale(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1},
                                         {3, 4, 1}, {3, 5, 1}, {4, 5, 1},
                                         {2, 3, 50}});
    PartitionSolution ps = solve_partition(g, 2, 1);
    REQUIRE(ps.parts.size() == 2);
    std::vector<int> sizes{static_cast<int>(ps.parts[0].size()),
                           static_cast<int>(ps.parts[1].size())};
    CHECK(sizes == std::vector<int>{3, 3});
    CHECK(ps.bottleneck == g.dist_units("1"));
}

TEST_CASE("solve_partition: validity and delta=1 ratio on random instances") {
    std::mt19937_64 rng(89);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 5 + static_cast<int>(rng() % 8); // up to 12
        Graph g = gen_random_connected(n, n - 1 + static_cast<int>(rng() % n), 5, rng());
        int k = 1 + static_cast<int>(rng() % 3);
        DistanceOracle o = all_pairs(g);
        PartitionSolution ps = solve_partition(g, o, k, 1);

        // parts are disjoint, cover V, and the bottleneck is their true
        // max intra-part distance
        std::vector<int> seen(n, 0);
        std::int64_t widest = 0;
        for (const auto& part : ps.parts)
            for (std::size_t i = 0; i < part.size(); ++i) {
                ++seen[part[i]];
                for (std::size_t j = i + 1; j < part.size(); ++j)
                    widest = std::max(widest, o.dist(part[i], part[j]));
            }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
        CHECK(widest == ps.bottleneck);
        CHECK(static_cast<int>(ps.parts.size()) <= k);

        // triangle inequality through the shared center
        CHECK(ps.bottleneck <= 2 * ps.kcenter.cost);
        // with delta = 1 (stars), the partition optimum equals the k-center
        // optimum, so c <= 3 OPT
        Solution exact = solve_exact(g, o, k);
        CHECK(ps.bottleneck <= 3 * exact.cost);
    }
}

TEST_CASE("solve_partition: parameter validation") {
    Graph g = build_graph_unit_scale(2, {{0, 1, 1}});
    CHECK_THROWS_AS(solve_partition(g, 1, 0), ValidationError);
}
