// Command-line surface: instance generation, solving, per-scale cover
// reports, metric embedding, invariant sweeps, and a benchmark harness.
//
// Exit codes: 0 success, 1 infeasible / budget exceeded, 2 invalid input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcenter/errors.hpp"
#include "kcenter/instance_lab.hpp"
#include "kcenter/report.hpp"
#include "kcenter/setcover.hpp"
#include "kcenter/solvers.hpp"
#include "kcenter/spc.hpp"
#include "kcenter/variants.hpp"

namespace {

using namespace kcenter;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void write_output_file(const std::string& path, const std::string& content) {
    // Content is fully composed before the file is touched; a failed run
    // leaves no partial file behind.
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValidationError("cannot open output file: " + path);
    out << content;
}

std::pair<std::int64_t, std::int64_t> parse_eps(const std::string& text) {
    std::size_t slash = text.find('/');
    std::int64_t p, q;
    if (slash != std::string::npos) {
        p = std::stoll(text.substr(0, slash));
        q = std::stoll(text.substr(slash + 1));
    } else {
        Decimal d = Decimal::parse(text);
        p = d.mantissa;
        q = 1;
        for (int i = 0; i < d.frac_digits; ++i)
            q *= 10;
    }
    if (p < 1 || q < 2 || p >= q)
        throw ValidationError("epsilon must satisfy 0 < eps < 1 (got " + text + ")");
    return {p, q};
}

struct SolveArgs {
    std::string graph_path;
    std::string algo = "fpa";
    std::int64_t k = 1;
    std::int64_t delta = 1;
    bool with_oracle = false;
    bool timings = false;
    std::string format = "table";
    SolveOptions options;
};

int cmd_solve(const SolveArgs& args) {
    GraphFile file = load_graph_file(args.graph_path);
    const Graph& g = file.graph;
    DistanceOracle oracle = all_pairs(g);

    RunReport report;
    report.instance = args.graph_path;
    report.n = g.n;
    report.m = static_cast<int>(g.edges.size());
    report.algorithm = args.algo;
    report.k = args.k;

    auto start = Clock::now();
    Solution sol;
    std::optional<PartitionSolution> partition;

    if (args.algo == "fpa") {
        sol = solve_fpa(g, oracle, static_cast<int>(args.k), args.options);
    } else if (args.algo == "hs") {
        sol = solve_hs(g, oracle, static_cast<int>(args.k));
    } else if (args.algo == "exact") {
        sol = solve_exact(g, oracle, static_cast<int>(args.k), args.options);
    } else if (args.algo == "weighted-fpa" || args.algo == "weighted-exact") {
        WeightedInstance wi;
        wi.graph = g;
        wi.weights = file.weights.value_or(std::vector<std::int64_t>(g.n, 1));
        wi.budget = args.k;
        sol = args.algo == "weighted-fpa" ? solve_weighted_fpa(wi, oracle, args.options)
                                          : solve_weighted_exact(wi, oracle, args.options);
    } else if (args.algo == "partition") {
        partition = solve_partition(g, oracle, static_cast<int>(args.k), args.delta,
                                    args.options);
        sol = partition->kcenter;
        report.delta = args.delta;
    } else {
        throw ValidationError("unknown algorithm: " + args.algo);
    }
    double ms = elapsed_ms(start);

    std::int64_t reported_cost = partition ? partition->bottleneck : sol.cost;
    report.cost = g.scale.format_dist(reported_cost);
    report.centers = sol.centers;
    report.fallback = sol.fallback;
    if (partition)
        report.parts = partition->parts;
    if (sol.algorithm == "fpa" || sol.algorithm == "weighted-fpa") {
        report.guesses = sol.guess_evaluations;
        for (const ScaleStats& s : sol.scales)
            if (s.accepted)
                report.accepted_scale = RunReport::SpcStats{
                    g.scale.format_dist(s.r), s.hub_count, s.sparsity, s.cluster_count};
        if (args.format == "json")
            report.scale_log = sol.scales;
    }

    if (args.with_oracle && g.n <= args.options.exact_cap) {
        Solution ref;
        if (args.algo == "weighted-fpa" || args.algo == "weighted-exact") {
            WeightedInstance wi;
            wi.graph = g;
            wi.weights = file.weights.value_or(std::vector<std::int64_t>(g.n, 1));
            wi.budget = args.k;
            ref = solve_weighted_exact(wi, oracle, args.options);
        } else {
            ref = solve_exact(g, oracle, static_cast<int>(args.k), args.options);
        }
        report.oracle_cost = g.scale.format_dist(ref.cost);
        report.ratio = format_ratio(reported_cost, ref.cost);
    }
    if (args.timings)
        report.wall_ms = ms;

    std::cout << (args.format == "json" ? render_json(report, g.scale)
                                        : render_table(report, g.scale));
    return 0;
}

struct SpcArgs {
    std::string graph_path;
    std::string scale_text; // optional single scale (original units)
    std::string format = "table";
};

int cmd_spc(const SpcArgs& args) {
    GraphFile file = load_graph_file(args.graph_path);
    const Graph& g = file.graph;
    DistanceOracle oracle = all_pairs(g);

    std::vector<std::int64_t> scales;
    if (!args.scale_text.empty()) {
        scales.push_back(g.dist_units(args.scale_text));
    } else {
        for (std::int64_t value : oracle.candidate_values())
            scales.push_back(value / 2);
        std::sort(scales.begin(), scales.end());
        scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    }

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream table;
    table << "r\tpaths\thubs\tsparsity\tclusters\tnon_cluster\n";
    for (std::int64_t r : scales) {
        ShortestPathCover spc = compute_spc(oracle, r);
        ClusterSet clusters = compute_clusters(oracle, spc);
        std::string r_text = g.scale.format_dist(r);
        table << r_text << "\t" << spc.covered_paths << "\t" << spc.hubs.size() << "\t"
              << spc.measured_sparsity << "\t" << clusters.clusters.size() << "\t"
              << clusters.non_cluster.size() << "\n";
        rows.push_back({{"r", r_text},
                        {"paths", spc.covered_paths},
                        {"hubs", spc.hubs},
                        {"sparsity", spc.measured_sparsity},
                        {"clusters", clusters.clusters.size()},
                        {"non_cluster", clusters.non_cluster.size()}});
    }
    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "v1";
        j["instance"] = args.graph_path;
        j["scales"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << table.str();
    }
    return 0;
}

struct EmbedArgs {
    std::string point_path;
    std::string eps_text = "1/5";
    int dim_est = 2;
    std::string out_path;
    std::string format = "table";
};

int cmd_embed(const EmbedArgs& args) {
    auto [p, q] = parse_eps(args.eps_text);
    PointMetric metric = load_point_file(args.point_path, args.dim_est);
    EmbedResult emb = embed_doubling(metric, p, q);
    DistanceOracle oracle = all_pairs(emb.graph);
    HierarchyCertificate cert = certify_hub_hierarchy(emb, oracle);

    std::string graph_text = write_graph_text(emb.graph);
    if (!args.out_path.empty())
        write_output_file(args.out_path, graph_text);

    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "v1";
        j["points"] = metric.n;
        j["eps"] = std::to_string(p) + "/" + std::to_string(q);
        j["levels"] = nlohmann::ordered_json::array();
        for (const auto& lv : cert.levels)
            j["levels"].push_back({{"level", lv.level},
                                   {"size", lv.size},
                                   {"sparsity", lv.sparsity},
                                   {"within_bound", lv.within_bound}});
        j["hub_hierarchy_ok"] = cert.pass();
        j["distortion_certified"] = true; // embed_doubling hard-fails otherwise
        j["edge_unit"] = {{"num", emb.unit_num}, {"den", emb.unit_den}};
        if (args.out_path.empty())
            j["graph"] = graph_text;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "embedded " << metric.n << " points, eps=" << p << "/" << q
                  << ", L=" << emb.hierarchy.top_level << "\n";
        std::cout << "distortion certificate: pass (exact)\n";
        std::cout << "hub hierarchy: " << (cert.pass() ? "pass" : "FAIL") << "\n";
        for (const auto& lv : cert.levels)
            std::cout << "  level " << lv.level << ": size=" << lv.size
                      << " sparsity=" << lv.sparsity
                      << (lv.within_bound ? "" : " (above proof bound)") << "\n";
        if (args.out_path.empty())
            std::cout << graph_text;
    }
    return cert.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify: seeded invariant sweeps

struct VerifyArgs {
    std::string suite = "lemmas";
    int count = 50;
    std::uint64_t seed = 1;
    int nmax = 12;
};

bool verify_lemmas(const VerifyArgs& args) {
    std::mt19937_64 rng(args.seed);
    bool ok = true;
    for (int i = 0; i < args.count; ++i) {
        int n = 4 + static_cast<int>(rng() % (args.nmax - 3));
        int extra = static_cast<int>(rng() % (n / 2 + 1));
        Graph g = gen_random_connected(n, n - 1 + extra, 5, rng());
        DistanceOracle oracle = all_pairs(g);

        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v)
                for (int w = 0; w < n && ok; ++w) {
                    if (!oracle.connected(u, v) || !oracle.connected(v, w))
                        continue;
                    if (oracle.dist(u, w) > oracle.dist(u, v) + oracle.dist(v, w)) {
                        std::cout << "FAIL triangle inequality (instance " << i << ")\n";
                        ok = false;
                    }
                }
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) {
                if (!oracle.connected(u, v))
                    continue;
                auto path = oracle.canonical_path(u, v);
                auto rev = oracle.canonical_path(v, u);
                std::reverse(rev.begin(), rev.end());
                if (path != rev) {
                    std::cout << "FAIL canonical path reversal (instance " << i << ")\n";
                    ok = false;
                }
                std::int64_t len = 0;
                for (std::size_t s = 1; s < path.size(); ++s)
                    len += oracle.dist(path[s - 1], path[s]);
                if (len != oracle.dist(u, v)) {
                    std::cout << "FAIL canonical path length (instance " << i << ")\n";
                    ok = false;
                }
            }
        for (std::int64_t value : oracle.candidate_values()) {
            std::int64_t r = value / 2;
            ShortestPathCover spc = compute_spc(oracle, r);
            if (!spc_is_valid(oracle, spc.hubs, r)) {
                std::cout << "FAIL SPC validity (instance " << i << ", r=" << r << ")\n";
                ok = false;
                continue;
            }
            try {
                compute_clusters(oracle, spc); // re-verifies the cluster structure
            } catch (const ValidationError& e) {
                std::cout << "FAIL " << e.what() << " (instance " << i << ")\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool verify_setcover(const VerifyArgs& args) {
    std::mt19937_64 rng(args.seed);
    bool ok = true;
    for (int i = 0; i < args.count && ok; ++i) {
        int u = 2 + static_cast<int>(rng() % 7);
        int nsets = 3 + static_cast<int>(rng() % 10);
        SetSystem system;
        for (int e = 0; e < u; ++e)
            system.universe.push_back(e);
        for (int s = 0; s < nsets; ++s) {
            CoverSet cs;
            cs.owner = s;
            cs.mask = static_cast<std::uint32_t>(rng() % (1u << u));
            cs.weight = 1 + static_cast<std::int64_t>(rng() % 5);
            system.sets.push_back(cs);
        }
        CoverTable table = build_table(system);
        for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
            // brute force over all subcollections
            std::int64_t best = -1;
            for (std::uint32_t pick = 0; pick < (1u << nsets); ++pick) {
                std::uint32_t covered = 0;
                std::int64_t w = 0;
                for (int s = 0; s < nsets; ++s)
                    if (pick >> s & 1) {
                        covered |= system.sets[s].mask;
                        w += system.sets[s].weight;
                    }
                if ((covered & mask) == mask && (best < 0 || w < best))
                    best = w;
            }
            CoverTable::Cover cover = table.lookup(mask);
            bool match = best < 0 ? !cover.feasible : (cover.feasible && cover.weight == best);
            if (!match) {
                std::cout << "FAIL cover table vs enumeration (system " << i << ", mask "
                          << mask << ")\n";
                ok = false;
                break;
            }
        }
    }
    return ok;
}

bool verify_embedding(const VerifyArgs& args) {
    std::mt19937_64 rng(args.seed);
    bool ok = true;
    const std::pair<std::int64_t, std::int64_t> eps_grid[3] = {{1, 10}, {1, 5}, {1, 2}};
    for (int i = 0; i < args.count && ok; ++i) {
        int n = 2 + static_cast<int>(rng() % std::max(1, args.nmax - 1));
        Norm norm = (i % 2 == 0) ? Norm::linf : Norm::l2;
        std::vector<std::vector<Decimal>> coords;
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        while (static_cast<int>(coords.size()) < n) {
            std::int64_t x = static_cast<std::int64_t>(rng() % 50);
            std::int64_t y = static_cast<std::int64_t>(rng() % 50);
            if (!seen.insert({x, y}).second)
                continue;
            coords.push_back({Decimal::from_int(x), Decimal::from_int(y)});
        }
        auto [p, q] = eps_grid[i % 3];
        PointMetric metric = PointMetric::from_points(coords, norm, 2);
        // embed_doubling hard-fails on any distortion violation
        EmbedResult emb = embed_doubling(metric, p, q);
        if (!net_levels_valid(emb)) {
            std::cout << "FAIL net hierarchy radii (instance " << i << ")\n";
            ok = false;
        }
        HierarchyCertificate cert = certify_hub_hierarchy(emb);
        if (!cert.pass()) {
            std::cout << "FAIL hub hierarchy (instance " << i << ")\n";
            ok = false;
        }
    }
    return ok;
}

bool verify_reduction(const VerifyArgs& args) {
    std::mt19937_64 rng(args.seed);
    bool ok = true;
    for (int i = 0; i < args.count && ok; ++i) {
        int n = 4 + static_cast<int>(rng() % std::max(1, args.nmax - 3));
        int extra = static_cast<int>(rng() % (n + 1));
        Graph base = gen_random_connected(n, n - 1 + extra, 3, rng());
        Graph unit = reduce_dominating_set(base);
        int k = 1 + static_cast<int>(rng() % 3);
        if (k >= n)
            k = n - 1;

        // brute-force smallest dominating set
        std::vector<std::uint32_t> closed(n, 0);
        for (int v = 0; v < n; ++v)
            closed[v] = std::uint32_t{1} << v;
        for (const Edge& e : unit.edges) {
            closed[e.u] |= std::uint32_t{1} << e.v;
            closed[e.v] |= std::uint32_t{1} << e.u;
        }
        int dom_min = n;
        for (std::uint32_t pick = 1; pick < (1u << n); ++pick) {
            std::uint32_t covered = 0;
            for (int v = 0; v < n; ++v)
                if (pick >> v & 1)
                    covered |= closed[v];
            if (covered == (1u << n) - 1)
                dom_min = std::min(dom_min, std::popcount(pick));
        }

        Solution exact = solve_exact(unit, k);
        bool cost_is_one = exact.cost == unit.dist_units("1");
        if (cost_is_one != (dom_min <= k)) {
            std::cout << "FAIL reduction fidelity (instance " << i << ")\n";
            ok = false;
        }
    }
    return ok;
}

int cmd_verify(const VerifyArgs& args) {
    bool ok;
    if (args.suite == "lemmas")
        ok = verify_lemmas(args);
    else if (args.suite == "setcover")
        ok = verify_setcover(args);
    else if (args.suite == "embedding")
        ok = verify_embedding(args);
    else if (args.suite == "reduction")
        ok = verify_reduction(args);
    else
        throw ValidationError("unknown suite: " + args.suite);
    std::cout << (ok ? "PASS" : "FAIL") << " suite " << args.suite << " (count=" << args.count
              << ", seed=" << args.seed << ")\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
    std::string family = "random";
    std::vector<int> ks = {1, 2, 3};
    int count = 5;
    int n = 10;
    int m = 14;
    int max_len = 5;
    int width = 3, height = 3;
    int clump_n = 5, clump_m = 6;
    std::uint64_t seed = 1;
    bool timings = false;
    std::string format = "table";
    SolveOptions options;
};

Graph make_clumps(int copies, int clump_n, int clump_m, int max_len, std::uint64_t seed) {
    Graph blob = gen_random_connected(clump_n, clump_m, max_len, seed);
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (int c = 0; c < copies; ++c)
        for (const Edge& e : blob.edges)
            edges.emplace_back(e.u + c * clump_n, e.v + c * clump_n, e.length);
    return build_graph_unit_scale(copies * clump_n, edges);
}

int cmd_bench(const BenchArgs& args) {
    struct Row {
        std::string instance, algo;
        int k;
        std::string cost, ratio;
        double ms;
        std::uint64_t guesses;
        bool work_bound_ok;
    };
    std::vector<Row> rows;
    nlohmann::ordered_json scale_details = nlohmann::ordered_json::array();

    auto run_instance = [&](const std::string& name, const Graph& g, int k) {
        DistanceOracle oracle = all_pairs(g);
        std::optional<Solution> exact;
        if (g.n <= args.options.exact_cap && oracle.component_count() <= k)
            exact = solve_exact(g, oracle, k, args.options);

        auto run_one = [&](const std::string& algo) {
            auto start = Clock::now();
            Solution sol = algo == "fpa" ? solve_fpa(g, oracle, k, args.options)
                                         : solve_hs(g, oracle, k);
            double ms = elapsed_ms(start);
            Row row;
            row.instance = name;
            row.algo = algo;
            row.k = k;
            row.cost = g.scale.format_dist(sol.cost);
            row.ratio = exact ? format_ratio(sol.cost, exact->cost) : "-";
            row.ms = ms;
            row.guesses = sol.guess_evaluations;
            row.work_bound_ok = true;
            if (algo == "fpa") {
                // Every unskipped scale must have evaluated exactly 3^{hubs}
                // assignments.
                nlohmann::ordered_json inst_scales = nlohmann::ordered_json::array();
                for (const ScaleStats& s : sol.scales) {
                    if (!s.skipped && !s.over_cap) {
                        std::uint64_t expect = 1;
                        for (int h = 0; h < s.hub_count; ++h)
                            expect *= 3;
                        if (s.guesses != expect)
                            row.work_bound_ok = false;
                    }
                    inst_scales.push_back({{"r", g.scale.format_dist(s.r)},
                                           {"hubs", s.hub_count},
                                           {"sparsity", s.sparsity},
                                           {"skipped", s.skipped},
                                           {"over_cap", s.over_cap},
                                           {"guesses", s.guesses},
                                           {"accepted", s.accepted}});
                }
                scale_details.push_back(
                    {{"instance", name}, {"k", k}, {"scales", std::move(inst_scales)}});
            }
            rows.push_back(row);
        };
        run_one("fpa");
        run_one("hs");
        if (exact) {
            Row row;
            row.instance = name;
            row.algo = "exact";
            row.k = k;
            row.cost = g.scale.format_dist(exact->cost);
            row.ratio = "1.000000";
            row.ms = 0;
            row.guesses = 0;
            row.work_bound_ok = true;
            rows.push_back(row);
        }
    };

    if (args.family == "random") {
        std::mt19937_64 rng(args.seed);
        for (int i = 0; i < args.count; ++i) {
            Graph g = gen_random_connected(args.n, args.m, args.max_len, rng());
            for (int k : args.ks)
                run_instance("random-" + std::to_string(i), g, k);
        }
    } else if (args.family == "grid") {
        Graph g = gen_grid(args.width, args.height);
        for (int k : args.ks)
            run_instance("grid-" + std::to_string(args.width) + "x" +
                             std::to_string(args.height),
                         g, k);
    } else if (args.family == "cubic") {
        Graph g = gen_cubic_instance(args.n, args.seed);
        for (int k : args.ks)
            run_instance("cubic-" + std::to_string(args.n), g, k);
    } else if (args.family == "clumps") {
        // The scaling family: k disjoint copies of one fixed blob, solved
        // with budget k. Hub counts at the relevant scales grow linearly in
        // k, so guess counts follow the 3^{ks} regime.
        for (int k : args.ks) {
            Graph g = make_clumps(k, args.clump_n, args.clump_m, args.max_len, args.seed);
            run_instance("clumps-" + std::to_string(k), g, k);
        }
    } else {
        throw ValidationError("unknown family: " + args.family);
    }

    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "v1";
        j["rows"] = nlohmann::ordered_json::array();
        for (const Row& r : rows) {
            nlohmann::ordered_json row = {{"instance", r.instance}, {"algo", r.algo},
                                          {"k", r.k},               {"cost", r.cost},
                                          {"ratio", r.ratio},       {"guesses", r.guesses},
                                          {"work_bound_ok", r.work_bound_ok}};
            if (args.timings)
                row["wall_ms"] = r.ms;
            j["rows"].push_back(std::move(row));
        }
        j["fpa_scales"] = std::move(scale_details);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "instance\talgo\tk\tcost\tratio\tguesses\twork_bound";
        if (args.timings)
            std::cout << "\twall_ms";
        std::cout << "\n";
        for (const Row& r : rows) {
            std::cout << r.instance << "\t" << r.algo << "\t" << r.k << "\t" << r.cost << "\t"
                      << r.ratio << "\t" << r.guesses << "\t"
                      << (r.work_bound_ok ? "ok" : "VIOLATED");
            if (args.timings)
                std::cout << "\t" << r.ms;
            std::cout << "\n";
        }
    }
    bool all_ok = true;
    for (const Row& r : rows)
        all_ok = all_ok && r.work_bound_ok;
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-center solver suite"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("graph", solve_args.graph_path, "graph file")->required();
    solve->add_option("--algo", solve_args.algo,
                      "fpa|hs|exact|weighted-fpa|weighted-exact|partition");
    solve->add_option("--k", solve_args.k, "center budget")->required();
    solve->add_option("--delta", solve_args.delta, "family radius (partition)");
    solve->add_flag("--with-oracle", solve_args.with_oracle, "also run the exact oracle");
    solve->add_flag("--timings", solve_args.timings, "include wall time in the report");
    solve->add_option("--format", solve_args.format, "table|json");
    solve->add_option("--threads", solve_args.options.threads, "guess evaluation workers");
    solve->add_flag("--fallback", solve_args.options.fallback,
                    "fall back to the 2-approximation on budget exhaustion");
    solve->add_option("--hub-cap", solve_args.options.hub_enumeration_cap,
                      "hub enumeration cap");
    solve->add_option("--table-cap", solve_args.options.table_universe_cap,
                      "cover table universe cap");
    solve->add_option("--exact-cap", solve_args.options.exact_cap, "exact solver size cap");
    solve->add_option("--time-budget-ms", solve_args.options.time_budget_ms,
                      "wall-clock budget for the scale scan (0 = unlimited)");

    SpcArgs spc_args;
    CLI::App* spc = app.add_subcommand("spc", "shortest path cover report per scale");
    spc->add_option("graph", spc_args.graph_path, "graph file")->required();
    spc->add_option("--scale", spc_args.scale_text, "single scale r (original units)");
    spc->add_option("--format", spc_args.format, "table|json");

    EmbedArgs embed_args;
    CLI::App* embed = app.add_subcommand("embed", "doubling metric -> low highway dimension");
    embed->add_option("points", embed_args.point_path, "point file")->required();
    embed->add_option("--eps", embed_args.eps_text, "distortion bound (decimal or p/q)");
    embed->add_option("--dim-est", embed_args.dim_est, "doubling dimension for reporting");
    embed->add_option("-o,--output", embed_args.out_path, "write the graph here");
    embed->add_option("--format", embed_args.format, "table|json");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "seeded invariant sweeps");
    verify->add_option("--suite", verify_args.suite, "lemmas|setcover|embedding|reduction");
    verify->add_option("--count", verify_args.count, "instances to sweep");
    verify->add_option("--seed", verify_args.seed, "rng seed");
    verify->add_option("--nmax", verify_args.nmax, "max instance size");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "benchmark harness");
    bench->add_option("--family", bench_args.family, "random|grid|cubic|clumps");
    bench->add_option("--k", bench_args.ks, "budgets to run");
    bench->add_option("--count", bench_args.count, "instances (random family)");
    bench->add_option("--n", bench_args.n, "vertices");
    bench->add_option("--m", bench_args.m, "edges");
    bench->add_option("--max-len", bench_args.max_len, "max edge length");
    bench->add_option("--width", bench_args.width, "grid width");
    bench->add_option("--height", bench_args.height, "grid height");
    bench->add_option("--clump-n", bench_args.clump_n, "clump vertices");
    bench->add_option("--clump-m", bench_args.clump_m, "clump edges");
    bench->add_option("--seed", bench_args.seed, "rng seed");
    bench->add_flag("--timings", bench_args.timings, "include wall times");
    bench->add_option("--format", bench_args.format, "table|json");
    bench->add_option("--hub-cap", bench_args.options.hub_enumeration_cap,
                      "hub enumeration cap");
    bench->add_option("--threads", bench_args.options.threads, "guess evaluation workers");

    // gen subcommands
    CLI::App* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);

    struct {
        int width = 2, height = 2;
        std::string out;
    } grid_args;
    CLI::App* gen_grid_cmd = gen->add_subcommand("grid", "w x h unit lattice");
    gen_grid_cmd->add_option("--width", grid_args.width, "columns")->required();
    gen_grid_cmd->add_option("--height", grid_args.height, "rows")->required();
    gen_grid_cmd->add_option("-o,--output", grid_args.out, "output file");

    struct {
        int n = 10, m = 15, max_len = 5;
        std::uint64_t seed = 1;
        std::string out;
    } random_args;
    CLI::App* gen_random_cmd = gen->add_subcommand("random", "random connected graph");
    gen_random_cmd->add_option("--n", random_args.n, "vertices")->required();
    gen_random_cmd->add_option("--m", random_args.m, "edges")->required();
    gen_random_cmd->add_option("--max-len", random_args.max_len, "max integer length");
    gen_random_cmd->add_option("--seed", random_args.seed, "rng seed");
    gen_random_cmd->add_option("-o,--output", random_args.out, "output file");

    struct {
        int n = 10;
        std::uint64_t seed = 1;
        std::string out;
    } cubic_args;
    CLI::App* gen_cubic_cmd = gen->add_subcommand("cubic", "random connected cubic graph");
    gen_cubic_cmd->add_option("--n", cubic_args.n, "vertices (even)")->required();
    gen_cubic_cmd->add_option("--seed", cubic_args.seed, "rng seed");
    gen_cubic_cmd->add_option("-o,--output", cubic_args.out, "output file");

    struct {
        std::string input, out;
    } reduce_args;
    CLI::App* gen_reduce_cmd =
        gen->add_subcommand("reduce-domset", "re-length a graph to unit edges");
    gen_reduce_cmd->add_option("--input", reduce_args.input, "source graph")->required();
    gen_reduce_cmd->add_option("-o,--output", reduce_args.out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(solve_args);
        if (spc->parsed())
            return cmd_spc(spc_args);
        if (embed->parsed())
            return cmd_embed(embed_args);
        if (verify->parsed())
            return cmd_verify(verify_args);
        if (bench->parsed())
            return cmd_bench(bench_args);
        if (gen->parsed()) {
            Graph g;
            std::string out_path;
            if (gen_grid_cmd->parsed()) {
                g = kcenter::gen_grid(grid_args.width, grid_args.height);
                out_path = grid_args.out;
            } else if (gen_random_cmd->parsed()) {
                g = gen_random_connected(random_args.n, random_args.m, random_args.max_len,
                                         random_args.seed);
                out_path = random_args.out;
            } else if (gen_cubic_cmd->parsed()) {
                g = gen_cubic_instance(cubic_args.n, cubic_args.seed);
                out_path = cubic_args.out;
            } else {
                g = reduce_dominating_set(load_graph_file(reduce_args.input).graph);
                out_path = reduce_args.out;
            }
            std::string text = write_graph_text(g);
            if (out_path.empty())
                std::cout << text;
            else
                write_output_file(out_path, text);
            return 0;
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
