#include <doctest.h>

#include <random>

#include "kcenter/instance_lab.hpp"
#include "kcenter/solvers.hpp"
#include "kcenter/spc.hpp"
#include "oracles.hpp"

using namespace kcenter;
namespace kt = kcenter::testing;

namespace {

// Feasibility recheck shared by every solver test: the stated cost really
// covers all vertices, and recomputation matches.
void check_solution(const Graph& g, const Solution& sol) {
    DistanceOracle o = all_pairs(g);
    REQUIRE_FALSE(sol.centers.empty());
    CHECK(o.covering_cost(sol.centers) == sol.cost);
    for (int v = 0; v < g.n; ++v)
        CHECK(o.dist_to_set(v, sol.centers) <= sol.cost);
}

Graph single_vertex() { return build_graph_unit_scale(1, {}); }

} // namespace

TEST_CASE("solve_exact: squares and cliques") {
    Graph cycle = gen_grid(2, 2);
    Solution sol = solve_exact(cycle, 2);
    CHECK(sol.cost == cycle.dist_units("1"));
    check_solution(cycle, sol);

    Graph clique = build_graph_unit_scale(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1},
                                              {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(solve_exact(clique, 1).cost == clique.dist_units("1"));
}

TEST_CASE("solve_exact agrees with subset enumeration") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 5 + static_cast<int>(rng() % 6); // up to 10
        Graph g = gen_random_connected(n, n - 1 + static_cast<int>(rng() % n), 5, rng());
        int k = 1 + static_cast<int>(rng() % 3);
        DistanceOracle o = all_pairs(g);
        Solution sol = solve_exact(g, o, k);
        CHECK(sol.cost == kt::brute_kcenter_cost(o, k));
        CHECK(static_cast<int>(sol.centers.size()) <= k);
        check_solution(g, sol);
    }
}

TEST_CASE("solve_exact: caps and infeasibility") {
    Graph g = gen_grid(5, 4); // n = 20
    CHECK_THROWS_AS(solve_exact(g, 2), CapacityError);

    Graph two = build_graph_unit_scale(2, {});
    CHECK_THROWS_AS(solve_exact(two, 1), InfeasibleError);
    CHECK(solve_exact(two, 2).cost == 0);
    CHECK_THROWS_AS(solve_exact(two, 0), ValidationError);
}

TEST_CASE("solve_hs: star bound and trivial cases") {
    Graph star = build_graph_unit_scale(5, {{4, 1, 1}, {4, 2, 1}, {4, 3, 1}, {4, 0, 1}});
    Solution sol = solve_hs(star, 1);
    check_solution(star, sol);
    CHECK(sol.cost <= 2 * solve_exact(star, 1).cost);

    CHECK(solve_hs(single_vertex(), 1).cost == 0);
}

TEST_CASE("solve_hs within twice the optimum on random graphs") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 4 + static_cast<int>(rng() % 9); // up to 12
        Graph g = gen_random_connected(n, n - 1 + static_cast<int>(rng() % n), 5, rng());
        int k = 1 + static_cast<int>(rng() % 3);
        DistanceOracle o = all_pairs(g);
        Solution hs = solve_hs(g, o, k);
        Solution exact = solve_exact(g, o, k);
        CHECK(static_cast<int>(hs.centers.size()) <= k);
        CHECK(hs.cost <= 2 * exact.cost);
        check_solution(g, hs);
    }
}

TEST_CASE("solve_fpa: single vertex") {
    Solution sol = solve_fpa(single_vertex(), 1);
    CHECK(sol.cost == 0);
    CHECK(sol.centers == std::vector<int>{0});
}

TEST_CASE("solve_fpa: 4-cycle within 3/2 of optimum") {
    Graph cycle = gen_grid(2, 2);
    Solution sol = solve_fpa(cycle, 2);
    Solution exact = solve_exact(cycle, 2);
    CHECK(exact.cost == cycle.dist_units("1"));
    CHECK(2 * sol.cost <= 3 * exact.cost);
    check_solution(cycle, sol);
}

TEST_CASE("solve_fpa: ratio, work bound, and trace on random graphs") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 4 + static_cast<int>(rng() % 9); // up to 12
        Graph g = gen_random_connected(n, n - 1 + static_cast<int>(rng() % n), 5, rng());
        int k = 1 + static_cast<int>(rng() % 3);
        DistanceOracle o = all_pairs(g);
        Solution sol = solve_fpa(g, o, k);
        Solution exact = solve_exact(g, o, k);

        CHECK(static_cast<int>(sol.centers.size()) <= k);
        CHECK(2 * sol.cost <= 3 * exact.cost); // cost/OPT <= 3/2, exactly
        check_solution(g, sol);

        // the evaluation counter at every unskipped scale is exactly 3^hubs
        for (const ScaleStats& s : sol.scales) {
            if (s.skipped || s.over_cap) {
                CHECK(s.guesses == 0);
                continue;
            }
            std::uint64_t expect = 1;
            for (int h = 0; h < s.hub_count; ++h)
                expect *= 3;
            CHECK(s.guesses == expect);
        }

        // trace soundness
        REQUIRE(sol.trace.has_value());
        const FpaTrace& tr = *sol.trace;
        std::vector<int> all = tr.c1;
        all.insert(all.end(), tr.c2.begin(), tr.c2.end());
        all.insert(all.end(), tr.c3.begin(), tr.c3.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        CHECK(all == sol.centers);
        for (int h : tr.guessed_h) {
            CHECK(std::binary_search(tr.hubs.begin(), tr.hubs.end(), h));
        }
        // R1 u R2 u R3 covers everything (the feasibility test enforced it)
        DynBits covered(g.n);
        for (int v : tr.r1)
            covered.set(v);
        for (int v : tr.r2)
            covered.set(v);
        for (int v : tr.r3)
            covered.set(v);
        CHECK(covered.count() == static_cast<std::uint64_t>(g.n));
        // every cluster is inside R1 u R2
        ShortestPathCover spc = compute_spc(o, tr.r);
        ClusterSet cs = compute_clusters(o, spc);
        DynBits r12(g.n);
        for (int v : tr.r1)
            r12.set(v);
        for (int v : tr.r2)
            r12.set(v);
        for (const auto& cluster : cs.clusters)
            for (int v : cluster)
                CHECK(r12.test(v));
        // accepted scale is recorded and the run is deterministic
        CHECK(sol.scales.back().accepted);
        Solution again = solve_fpa(g, o, k);
        CHECK(again.centers == sol.centers);
        CHECK(again.cost == sol.cost);
        CHECK(again.guess_evaluations == sol.guess_evaluations);
    }
}

TEST_CASE("solve_fpa: bounded-hubs analogue at half the optimum") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = gen_random_connected(n, n - 1 + static_cast<int>(rng() % n), 4, rng());
        int k = 1 + static_cast<int>(rng() % 3);
        DistanceOracle o = all_pairs(g);
        Solution exact = solve_exact(g, o, k);
        ShortestPathCover spc = compute_spc(o, exact.cost / 2);
        CHECK(static_cast<std::int64_t>(spc.hubs.size()) <=
              static_cast<std::int64_t>(k) * spc.measured_sparsity);
    }
}

TEST_CASE("solve_fpa: parallel guess evaluation matches serial") {
    std::mt19937_64 rng(67);
    Graph g = gen_random_connected(10, 16, 4, rng());
    DistanceOracle o = all_pairs(g);
    SolveOptions serial, parallel;
    parallel.threads = 4;
    Solution a = solve_fpa(g, o, 2, serial);
    Solution b = solve_fpa(g, o, 2, parallel);
    CHECK(a.centers == b.centers);
    CHECK(a.cost == b.cost);
    CHECK(a.guess_evaluations == b.guess_evaluations);
}

TEST_CASE("solve_fpa: infeasible and budget paths") {
    Graph two = build_graph_unit_scale(2, {});
    CHECK_THROWS_AS(solve_fpa(two, 1), InfeasibleError);

    // Force the budget path with a hub cap of zero: scales with hubs get
    // capped, and the only uncapped scale (r=0) happens to solve k >= n
    // instances only.
    Graph path = build_graph_unit_scale(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    SolveOptions strangled;
    strangled.hub_enumeration_cap = 0;
    CHECK_THROWS_AS(solve_fpa(path, 1, strangled), BudgetExceededError);

    SolveOptions with_fallback = strangled;
    with_fallback.fallback = true;
    Solution fb = solve_fpa(path, 1, with_fallback);
    CHECK(fb.fallback);
    CHECK(fb.algorithm == "hs-fallback");
    check_solution(path, fb);
    Solution exact = solve_exact(path, 1);
    CHECK(fb.cost <= 2 * exact.cost);
}

TEST_CASE("solve_fpa: time budget aborts long scans") {
    std::mt19937_64 rng(99);
    Graph g = gen_random_connected(40, 70, 9, rng());
    SolveOptions rushed;
    rushed.time_budget_ms = 1;
    CHECK_THROWS_AS(solve_fpa(g, 3, rushed), BudgetExceededError);

    SolveOptions rushed_fb = rushed;
    rushed_fb.fallback = true;
    Solution fb = solve_fpa(g, 3, rushed_fb);
    CHECK(fb.fallback);
    check_solution(g, fb);
}

TEST_CASE("solve_fpa: k >= n returns cost zero at scale zero") {
    Graph g = build_graph_unit_scale(3, {{0, 1, 4}, {1, 2, 5}});
    Solution sol = solve_fpa(g, 3);
    CHECK(sol.cost == 0);
    CHECK(sol.centers == std::vector<int>{0, 1, 2});
}
