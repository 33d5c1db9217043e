#include "kcenter/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "kcenter/errors.hpp"
#include "kcenter/setcover.hpp"
#include "kcenter/spc.hpp"
#include "fpa_engine.hpp"

namespace kcenter {

namespace detail {

namespace {

// State for one scale of the engine: everything a guess evaluation reads.
struct ScaleContext {
    const DistanceOracle* oracle = nullptr;
    const FpaEngineConfig* cfg = nullptr;
    std::int64_t r = 0;
    std::vector<int> hubs;                 // ascending
    std::vector<int> c1_vertex;            // per hub index: the C1 center it contributes
    std::vector<DynBits> region_ball;      // B_v(mult*r) per vertex
    std::vector<DynBits> cluster_bits;     // per cluster
    std::vector<int> cluster_rep;          // argmin (weight, id) per cluster
    const CoverTable* table = nullptr;     // universe = hubs, sets owned by cluster vertices
    DynBits full;
};

// Reusable per-worker scratch to keep the inner loop allocation-free.
struct GuessScratch {
    DynBits c_bits, r_bits;
    explicit GuessScratch(int n) : c_bits(n), r_bits(n) {}
};

// Evaluates one (H, H') assignment; returns true when it is feasible.
bool evaluate_guess(const ScaleContext& sc, std::uint32_t h_mask, std::uint32_t hp_mask,
                    GuessScratch& scratch) {
    const FpaEngineConfig& cfg = *sc.cfg;

    DynBits& covered = scratch.r_bits;
    DynBits& centers = scratch.c_bits;
    covered.clear();
    centers.clear();

    // C1 and its region.
    for (std::uint32_t m = h_mask; m != 0; m &= m - 1) {
        int idx = std::countr_zero(m);
        int v = sc.c1_vertex[idx];
        centers.set(v);
        covered.or_with(sc.region_ball[v]);
    }

    // C2: one representative per cluster that C1's region misses.
    for (std::size_t c = 0; c < sc.cluster_bits.size(); ++c)
        if (!covered.covers(sc.cluster_bits[c]))
            centers.set(sc.cluster_rep[c]);

    // C3 from the pre-built cover table.
    if (!sc.table->feasible(hp_mask))
        return false;
    sc.table->walk(hp_mask, [&](int s) { centers.set(sc.table->sets()[s].owner); });

    std::int64_t total_weight = 0;
    bool over_budget = false;
    centers.for_each([&](int v) {
        total_weight += cfg.weights[v];
        if (total_weight > cfg.budget)
            over_budget = true;
    });
    if (over_budget)
        return false;

    // Fold in every center's region (C1 members get re-ORed, harmlessly).
    centers.for_each([&](int v) { covered.or_with(sc.region_ball[v]); });
    return covered == sc.full;
}

// Decodes a ternary counter into the two hub-index masks. Digit j (value of
// 3^j) belongs to hub j: 1 puts it in H, 2 in H'.
void decode_counter(std::uint64_t counter, int m, std::uint32_t& h_mask,
                    std::uint32_t& hp_mask) {
    h_mask = 0;
    hp_mask = 0;
    for (int j = 0; j < m; ++j) {
        switch (counter % 3) {
        case 1: h_mask |= std::uint32_t{1} << j; break;
        case 2: hp_mask |= std::uint32_t{1} << j; break;
        default: break;
        }
        counter /= 3;
    }
}

using Deadline = std::chrono::steady_clock::time_point;

// Sentinel distinct from "no feasible counter" for an aborted scan.
constexpr std::uint64_t kScanTimedOut = UINT64_MAX - 1;

// Scans counters [lo, hi) in order and returns the lowest feasible one, or
// UINT64_MAX. Maintains the digit odometer incrementally.
std::uint64_t scan_range(const ScaleContext& sc, std::uint64_t lo, std::uint64_t hi,
                         Deadline deadline) {
    const int m = static_cast<int>(sc.hubs.size());
    std::uint32_t h_mask, hp_mask;
    decode_counter(lo, m, h_mask, hp_mask);
    std::vector<int> digits(m, 0);
    {
        std::uint64_t c = lo;
        for (int j = 0; j < m; ++j) {
            digits[j] = static_cast<int>(c % 3);
            c /= 3;
        }
    }
    GuessScratch scratch(sc.oracle->n());
    const bool fast_h_reject = !sc.cfg->c1_cheapest_in_ball;
    for (std::uint64_t counter = lo; counter < hi; ++counter) {
        if ((counter & 0xFFFF) == 0 && deadline != Deadline::max() &&
            std::chrono::steady_clock::now() > deadline)
            return kScanTimedOut;
        // A plain run can reject on |H| > budget before touching any bitset:
        // C1 = H contributes |H| distinct unit-weight centers.
        bool viable = !fast_h_reject ||
                      std::popcount(h_mask) <= sc.cfg->budget;
        if (viable && evaluate_guess(sc, h_mask, hp_mask, scratch))
            return counter;
        // Advance the odometer.
        for (int j = 0; j < m; ++j) {
            std::uint32_t bit = std::uint32_t{1} << j;
            if (digits[j] == 0) {
                digits[j] = 1;
                h_mask |= bit;
                break;
            }
            if (digits[j] == 1) {
                digits[j] = 2;
                h_mask &= ~bit;
                hp_mask |= bit;
                break;
            }
            digits[j] = 0;
            hp_mask &= ~bit;
        }
    }
    return UINT64_MAX;
}

std::uint64_t pow3(int m) {
    std::uint64_t p = 1;
    for (int i = 0; i < m; ++i)
        p *= 3;
    return p;
}

} // namespace

Solution run_fpa_engine(const DistanceOracle& oracle, const FpaEngineConfig& cfg) {
    const int n = oracle.n();
    const int mult = cfg.region_radius_mult;

    Solution sol;
    sol.algorithm = cfg.algorithm_tag;
    bool any_capped = false;

    const Deadline deadline =
        cfg.options.time_budget_ms > 0
            ? std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(cfg.options.time_budget_ms)
            : Deadline::max();

    for (std::int64_t value : oracle.candidate_values()) {
        if (deadline != Deadline::max() && std::chrono::steady_clock::now() > deadline)
            throw BudgetExceededError("time budget exhausted during the scale scan");
        const std::int64_t r = value / 2; // distance units are even by construction
        ShortestPathCover spc = compute_spc(oracle, r);
        const int m = static_cast<int>(spc.hubs.size());

        ScaleStats stats;
        stats.r = r;
        stats.hub_count = m;
        stats.sparsity = spc.measured_sparsity;

        // Too many hubs means r != rho/2; dismiss this scale only.
        if (static_cast<std::int64_t>(m) >
            cfg.budget * static_cast<std::int64_t>(spc.measured_sparsity)) {
            stats.skipped = true;
            sol.scales.push_back(stats);
            continue;
        }
        ClusterSet clusters = compute_clusters(oracle, spc);
        stats.cluster_count = static_cast<int>(clusters.clusters.size());

        // 3^40 overflows the 64-bit guess counter; treat it like a cap.
        if (m > cfg.options.hub_enumeration_cap || m > cfg.options.table_universe_cap ||
            m > 39) {
            stats.over_cap = true;
            any_capped = true;
            sol.scales.push_back(stats);
            continue;
        }

        // Scale context: regions, cluster representatives, cover table.
        ScaleContext sc;
        sc.oracle = &oracle;
        sc.cfg = &cfg;
        sc.r = r;
        sc.hubs = spc.hubs;
        sc.full = DynBits(n);
        sc.full.set_all();
        sc.region_ball.assign(n, DynBits(n));
        for (int v = 0; v < n; ++v)
            oracle.ball_bits(v, mult * r, sc.region_ball[v]);

        sc.c1_vertex.resize(m);
        for (int idx = 0; idx < m; ++idx) {
            int hub = spc.hubs[idx];
            if (!cfg.c1_cheapest_in_ball) {
                sc.c1_vertex[idx] = hub;
            } else {
                int best = hub;
                for (int v : oracle.ball(hub, r))
                    if (cfg.weights[v] < cfg.weights[best] ||
                        (cfg.weights[v] == cfg.weights[best] && v < best))
                        best = v;
                sc.c1_vertex[idx] = best;
            }
        }

        for (const auto& cluster : clusters.clusters) {
            DynBits bits(n);
            int rep = cluster.front();
            for (int v : cluster) {
                bits.set(v);
                if (cfg.weights[v] < cfg.weights[rep]) // ascending ids: ties keep lowest
                    rep = v;
            }
            sc.cluster_bits.push_back(std::move(bits));
            sc.cluster_rep.push_back(rep);
        }

        SetSystem system;
        system.universe = spc.hubs;
        system.universe_cap = cfg.options.table_universe_cap;
        for (const auto& cluster : clusters.clusters)
            for (int v : cluster) {
                CoverSet s;
                s.owner = v;
                s.weight = cfg.weights[v];
                for (int idx = 0; idx < m; ++idx)
                    if (oracle.dist(v, spc.hubs[idx]) <= 2 * r)
                        s.mask |= std::uint32_t{1} << idx;
                system.sets.push_back(s);
            }
        CoverTable table = build_table(system);
        sc.table = &table;

        // Every assignment of hubs to {H, H', neither} is evaluated — the
        // counter for an unskipped scale is exactly 3^m — and the lowest
        // feasible counter wins, so parallel runs match serial ones.
        const std::uint64_t total = pow3(m);
        stats.guesses = total;
        sol.guess_evaluations += total;

        std::uint64_t winner = UINT64_MAX;
        bool timed_out = false;
        int workers = std::max(1, cfg.options.threads);
        if (workers == 1 || total < 4096) {
            winner = scan_range(sc, 0, total, deadline);
            timed_out = winner == kScanTimedOut;
        } else {
            std::vector<std::uint64_t> results(workers, UINT64_MAX);
            std::vector<std::thread> pool;
            std::uint64_t chunk = (total + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
                std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
                pool.emplace_back(
                    [&, w, lo, hi] { results[w] = scan_range(sc, lo, hi, deadline); });
            }
            for (auto& t : pool)
                t.join();
            for (std::uint64_t res : results) {
                timed_out = timed_out || res == kScanTimedOut;
                if (res != kScanTimedOut)
                    winner = std::min(winner, res);
            }
        }
        // An aborted scan may have missed a lower feasible counter, so a
        // timeout always aborts the whole run.
        if (timed_out)
            throw BudgetExceededError("time budget exhausted during guess enumeration");

        if (winner != UINT64_MAX) {
            stats.accepted = true;
            sol.scales.push_back(stats);

            std::uint32_t h_mask, hp_mask;
            decode_counter(winner, m, h_mask, hp_mask);

            FpaTrace trace;
            trace.r = r;
            trace.region_radius_mult = mult;
            trace.hubs = spc.hubs;
            for (int idx = 0; idx < m; ++idx) {
                if (h_mask >> idx & 1)
                    trace.guessed_h.push_back(spc.hubs[idx]);
                else if (hp_mask >> idx & 1)
                    trace.guessed_h_prime.push_back(spc.hubs[idx]);
            }

            DynBits covered(n);
            for (std::uint32_t mm = h_mask; mm != 0; mm &= mm - 1) {
                int v = sc.c1_vertex[std::countr_zero(mm)];
                if (std::find(trace.c1.begin(), trace.c1.end(), v) == trace.c1.end())
                    trace.c1.push_back(v);
                covered.or_with(sc.region_ball[v]);
            }
            std::sort(trace.c1.begin(), trace.c1.end());
            for (std::size_t c = 0; c < sc.cluster_bits.size(); ++c)
                if (!covered.covers(sc.cluster_bits[c]))
                    trace.c2.push_back(sc.cluster_rep[c]);
            table.walk(hp_mask, [&](int s) { trace.c3.push_back(table.sets()[s].owner); });
            std::sort(trace.c3.begin(), trace.c3.end());

            auto region_of = [&](const std::vector<int>& cs) {
                DynBits bits(n);
                for (int v : cs)
                    bits.or_with(sc.region_ball[v]);
                return bits.to_vertices();
            };
            trace.r1 = region_of(trace.c1);
            trace.r2 = region_of(trace.c2);
            trace.r3 = region_of(trace.c3);

            DynBits centers(n);
            for (int v : trace.c1)
                centers.set(v);
            for (int v : trace.c2)
                centers.set(v);
            for (int v : trace.c3)
                centers.set(v);
            sol.centers = centers.to_vertices();
            sol.cost = oracle.covering_cost(sol.centers);
            assert(sol.cost <= mult * r);
            sol.trace = std::move(trace);
            return sol;
        }
        sol.scales.push_back(stats);
    }

    if (any_capped)
        throw BudgetExceededError(
            "hub enumeration cap exceeded at every scale that could have "
            "produced a solution");
    throw std::logic_error("scale scan exhausted without acceptance on a feasible instance");
}

} // namespace detail

namespace {

void check_k(int k) {
    if (k < 1)
        throw ValidationError("k must be at least 1");
}

} // namespace

Solution solve_fpa(const Graph& g, const DistanceOracle& oracle, int k,
                   const SolveOptions& options) {
    check_k(k);
    if (oracle.component_count() > k)
        throw InfeasibleError("graph has " + std::to_string(oracle.component_count()) +
                              " components but only " + std::to_string(k) +
                              " centers are allowed");
    detail::FpaEngineConfig cfg;
    cfg.weights.assign(g.n, 1);
    cfg.budget = k;
    cfg.region_radius_mult = 3;
    cfg.c1_cheapest_in_ball = false;
    cfg.algorithm_tag = "fpa";
    cfg.options = options;
    try {
        return detail::run_fpa_engine(oracle, cfg);
    } catch (const BudgetExceededError&) {
        if (!options.fallback)
            throw;
        Solution sol = solve_hs(g, oracle, k);
        sol.algorithm = "hs-fallback";
        sol.fallback = true;
        return sol;
    }
}

Solution solve_fpa(const Graph& g, int k, const SolveOptions& options) {
    DistanceOracle oracle = all_pairs(g);
    return solve_fpa(g, oracle, k, options);
}

Solution solve_hs(const Graph&, const DistanceOracle& oracle, int k) {
    check_k(k);
    if (oracle.component_count() > k)
        throw InfeasibleError("graph has " + std::to_string(oracle.component_count()) +
                              " components but only " + std::to_string(k) +
                              " centers are allowed");
    const int n = oracle.n();
    DynBits ball(n);
    for (std::int64_t rho : oracle.candidate_values()) {
        DynBits uncovered(n);
        uncovered.set_all();
        std::vector<int> centers;
        while (uncovered.any() && static_cast<int>(centers.size()) < k) {
            int v = uncovered.lowest_set();
            centers.push_back(v);
            oracle.ball_bits(v, 2 * rho, ball);
            uncovered.and_not(ball);
        }
        if (!uncovered.any()) {
            Solution sol;
            sol.centers = std::move(centers);
            sol.cost = oracle.covering_cost(sol.centers);
            sol.algorithm = "hs";
            return sol;
        }
    }
    throw std::logic_error("bottleneck scan exhausted on a feasible instance");
}

Solution solve_hs(const Graph& g, int k) {
    DistanceOracle oracle = all_pairs(g);
    return solve_hs(g, oracle, k);
}

Solution solve_exact(const Graph& g, const DistanceOracle& oracle, int k,
                     const SolveOptions& options) {
    check_k(k);
    if (g.n > options.exact_cap)
        throw CapacityError("exact solver limited to n <= " + std::to_string(options.exact_cap) +
                            " (got n = " + std::to_string(g.n) + ")");
    if (oracle.component_count() > k)
        throw InfeasibleError("graph has " + std::to_string(oracle.component_count()) +
                              " components but only " + std::to_string(k) +
                              " centers are allowed");
    const int n = oracle.n();
    for (std::int64_t rho : oracle.candidate_values()) {
        SetSystem system;
        system.universe.resize(n);
        for (int v = 0; v < n; ++v)
            system.universe[v] = v;
        system.universe_cap = std::max(options.table_universe_cap, n);
        for (int v = 0; v < n; ++v) {
            CoverSet s;
            s.owner = v;
            for (int u : oracle.ball(v, rho))
                s.mask |= std::uint32_t{1} << u;
            system.sets.push_back(s);
        }
        CoverTable table = build_table(system);
        CoverTable::Cover cover = table.lookup(table.full_mask());
        if (cover.feasible && cover.weight <= k) {
            Solution sol;
            for (int s : cover.set_indices)
                sol.centers.push_back(table.sets()[s].owner);
            std::sort(sol.centers.begin(), sol.centers.end());
            sol.cost = oracle.covering_cost(sol.centers);
            sol.algorithm = "exact";
            assert(sol.cost == rho);
            return sol;
        }
    }
    throw std::logic_error("radius scan exhausted on a feasible instance");
}

Solution solve_exact(const Graph& g, int k, const SolveOptions& options) {
    DistanceOracle oracle = all_pairs(g);
    return solve_exact(g, oracle, k, options);
}

} // namespace kcenter
