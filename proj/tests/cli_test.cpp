#include <doctest.h>

#include <atomic>
#include <unistd.h>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

#ifndef KCENTER_CLI_PATH
#define KCENTER_CLI_PATH "./kcenter"
#endif

std::string temp_path(const char* suffix) {
    static std::atomic<int> counter{0};
    return "/tmp/kcenter_cli_test_" + std::to_string(getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string out_file = temp_path(".out");
    std::string cmd = std::string(KCENTER_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    res.output = ss.str();
    std::remove(out_file.c_str());
    return res;
}

} // namespace

TEST_CASE("cli: gen + solve round trip with exit code contract") {
    std::string graph = temp_path(".graph");
    CliResult gen = run_cli("gen grid --width 2 --height 2 -o " + graph);
    CHECK(gen.exit_code == 0);

    CliResult exact = run_cli("solve " + graph + " --algo exact --k 2");
    CHECK(exact.exit_code == 0);
    CHECK(exact.output.find("cost        1") != std::string::npos);

    CliResult fpa = run_cli("solve " + graph + " --algo fpa --k 2 --with-oracle");
    CHECK(fpa.exit_code == 0);

    CliResult infeasible = run_cli("solve " + graph + " --algo exact --k 0");
    CHECK(infeasible.exit_code == 2); // k < 1 is invalid input

    std::remove(graph.c_str());
}

TEST_CASE("cli: infeasible instances exit 1, bad input exits 2") {
    std::string graph = temp_path(".graph");
    {
        std::ofstream out(graph);
        out << "2 0\n"; // two isolated vertices
    }
    CliResult r = run_cli("solve " + graph + " --algo exact --k 1");
    CHECK(r.exit_code == 1);
    std::remove(graph.c_str());

    CliResult missing = run_cli("solve /nonexistent.graph --algo exact --k 1");
    CHECK(missing.exit_code == 2);

    std::string bad = temp_path(".graph");
    {
        std::ofstream out(bad);
        out << "2 1\n0 1 -3\n";
    }
    CliResult malformed = run_cli("solve " + bad + " --algo exact --k 1");
    CHECK(malformed.exit_code == 2);
    CHECK(malformed.output.find("line 2") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("cli: reports are byte-identical across reruns") {
    std::string graph = temp_path(".graph");
    CliResult gen = run_cli("gen random --n 9 --m 14 --max-len 4 --seed 11 -o " + graph);
    REQUIRE(gen.exit_code == 0);

    CliResult a = run_cli("solve " + graph + " --algo fpa --k 2 --with-oracle --format json");
    CliResult b = run_cli("solve " + graph + " --algo fpa --k 2 --with-oracle --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    CliResult gen2 = run_cli("gen random --n 9 --m 14 --max-len 4 --seed 11");
    CliResult gen3 = run_cli("gen random --n 9 --m 14 --max-len 4 --seed 11");
    CHECK(gen2.output == gen3.output);
    std::remove(graph.c_str());
}

TEST_CASE("cli: spc report and verify suites") {
    std::string graph = temp_path(".graph");
    run_cli("gen grid --width 3 --height 2 -o " + graph);
    CliResult spc = run_cli("spc " + graph);
    CHECK(spc.exit_code == 0);
    CHECK(spc.output.find("sparsity") != std::string::npos);
    std::remove(graph.c_str());

    CliResult lemmas = run_cli("verify --suite lemmas --count 6 --seed 3 --nmax 9");
    CHECK(lemmas.exit_code == 0);
    CHECK(lemmas.output.find("PASS") != std::string::npos);

    CliResult cover = run_cli("verify --suite setcover --count 4 --seed 3");
    CHECK(cover.exit_code == 0);

    CliResult unknown = run_cli("verify --suite bogus");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("cli: embed produces a certified graph") {
    std::string points = temp_path(".pts");
    {
        std::ofstream out(points);
        out << "points 5 2 linf\n0 0\n4 1\n9 3\n2 8\n7 6\n";
    }
    std::string graph = temp_path(".graph");
    CliResult emb = run_cli("embed " + points + " --eps 0.2 -o " + graph);
    CHECK(emb.exit_code == 0);
    CHECK(emb.output.find("hub hierarchy: pass") != std::string::npos);

    CliResult solve = run_cli("solve " + graph + " --algo fpa --k 2 --with-oracle");
    CHECK(solve.exit_code == 0);
    std::remove(points.c_str());
    std::remove(graph.c_str());
}

TEST_CASE("cli: weighted and partition algorithms") {
    std::string graph = temp_path(".graph");
    {
        std::ofstream out(graph);
        out << "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\nw 0 2\nw 2 3\n";
    }
    CliResult wf = run_cli("solve " + graph + " --algo weighted-fpa --k 3 --with-oracle");
    CHECK(wf.exit_code == 0);
    CHECK(wf.output.find("ratio") != std::string::npos);

    CliResult we = run_cli("solve " + graph + " --algo weighted-exact --k 3");
    CHECK(we.exit_code == 0);

    CliResult part = run_cli("solve " + graph + " --algo partition --k 2 --delta 1");
    CHECK(part.exit_code == 0);
    CHECK(part.output.find("parts") != std::string::npos);

    std::string pricey = temp_path(".graph");
    {
        std::ofstream out(pricey);
        out << "2 1\n0 1 1\nw 0 5\nw 1 5\n";
    }
    CliResult broke = run_cli("solve " + pricey + " --algo weighted-fpa --k 3");
    CHECK(broke.exit_code == 1); // no affordable center
    std::remove(graph.c_str());
    std::remove(pricey.c_str());
}

TEST_CASE("cli: spc single-scale filter") {
    std::string graph = temp_path(".graph");
    run_cli("gen grid --width 2 --height 2 -o " + graph);
    CliResult one = run_cli("spc " + graph + " --scale 0.5");
    CHECK(one.exit_code == 0);
    CliResult bad = run_cli("spc " + graph + " --scale 0.3");
    CHECK(bad.exit_code == 2); // not representable at this precision
    std::remove(graph.c_str());
}

TEST_CASE("cli: bench reports the 3^hubs work bound") {
    CliResult bench = run_cli(
        "bench --family clumps --clump-n 4 --clump-m 4 --k 1 --k 2 --seed 5 --format json");
    CHECK(bench.exit_code == 0);
    CHECK(bench.output.find("work_bound_ok\": true") != std::string::npos);
}
