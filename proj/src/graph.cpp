#include "kcenter/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <tuple>

namespace kcenter {

std::vector<std::vector<std::pair<int, std::int64_t>>> Graph::adjacency_dist_units() const {
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj(n);
    for (const Edge& e : edges) {
        std::int64_t len = 2 * e.length;
        adj[e.u].emplace_back(e.v, len);
        adj[e.v].emplace_back(e.u, len);
    }
    for (auto& nbrs : adj)
        std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

int Graph::component_count() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = n;
    for (const Edge& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

Graph build_graph(int n, const std::vector<EdgeInput>& edges) {
    if (n < 1)
        throw ValidationError("vertex count must be at least 1");

    int frac = 0;
    for (const EdgeInput& e : edges)
        frac = std::max(frac, e.length.frac_digits);
    LengthScale scale(frac);

    Graph g;
    g.n = n;
    g.scale = scale;
    g.edges.reserve(edges.size());
    for (const EdgeInput& e : edges) {
        if (!e.length.positive())
            throw ValidationError("non-positive length on edge (" + std::to_string(e.u) +
                                  ", " + std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw ValidationError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw ValidationError("edge endpoint out of range: (" + std::to_string(e.u) +
                                  ", " + std::to_string(e.v) + ") with n=" + std::to_string(n));
        Edge edge;
        edge.u = std::min(e.u, e.v);
        edge.v = std::max(e.u, e.v);
        edge.length = scale.edge_units(e.length);
        // Keep path sums far away from the distance infinity sentinel.
        if (edge.length > (std::int64_t{1} << 50))
            throw ValidationError("edge length too large at this precision");
        g.edges.push_back(edge);
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t i = 1; i < g.edges.size(); ++i)
        if (g.edges[i - 1].u == g.edges[i].u && g.edges[i - 1].v == g.edges[i].v)
            throw ValidationError("duplicate edge (" + std::to_string(g.edges[i].u) + ", " +
                                  std::to_string(g.edges[i].v) + ")");
    return g;
}

Graph build_graph_unit_scale(int n, const std::vector<std::tuple<int, int, std::int64_t>>& edges) {
    std::vector<EdgeInput> in;
    in.reserve(edges.size());
    for (auto [u, v, len] : edges)
        in.push_back(EdgeInput{u, v, Decimal::from_int(len)});
    return build_graph(n, in);
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw ValidationError("graph file line " + std::to_string(line_no) + ": " + what);
}

} // namespace

GraphFile parse_graph_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<EdgeInput> edges;
    std::vector<std::pair<int, std::int64_t>> weight_entries;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0)
                parse_fail(line_no, "expected header 'n m'");
            continue;
        }
        std::string first;
        ls >> first;
        if (first == "w") {
            long long v, w;
            if (!(ls >> v >> w))
                parse_fail(line_no, "expected 'w vertex weight'");
            if (v < 0 || v >= n)
                parse_fail(line_no, "weight vertex out of range");
            if (w < 1)
                parse_fail(line_no, "vertex weight must be positive");
            weight_entries.emplace_back(static_cast<int>(v), w);
            continue;
        }
        if (static_cast<long long>(edges.size()) >= m)
            parse_fail(line_no, "more edge lines than declared in the header");
        long long u, v;
        std::string len_text;
        try {
            u = std::stoll(first);
        } catch (...) {
            parse_fail(line_no, "expected 'u v length'");
        }
        if (!(ls >> v >> len_text))
            parse_fail(line_no, "expected 'u v length'");
        EdgeInput e;
        e.u = static_cast<int>(u);
        e.v = static_cast<int>(v);
        try {
            e.length = Decimal::parse(len_text);
        } catch (const ValidationError& err) {
            parse_fail(line_no, err.what());
        }
        edges.push_back(e);
    }
    if (n < 0)
        throw ValidationError("graph file: missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ValidationError("graph file: expected " + std::to_string(m) + " edges, found " +
                              std::to_string(edges.size()));

    GraphFile out;
    out.graph = build_graph(static_cast<int>(n), edges);
    if (!weight_entries.empty()) {
        std::vector<std::int64_t> w(n, 1);
        for (auto [v, weight] : weight_entries)
            w[v] = weight;
        out.weights = std::move(w);
    }
    return out;
}

GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open graph file: " + path);
    return parse_graph_text(in);
}

std::string write_graph_text(const Graph& g, const std::vector<std::int64_t>* weights) {
    std::ostringstream out;
    out << g.n << " " << g.edges.size() << "\n";
    for (const Edge& e : g.edges)
        out << e.u << " " << e.v << " " << g.scale.format_edge(e.length) << "\n";
    if (weights)
        for (int v = 0; v < g.n; ++v)
            if ((*weights)[v] != 1)
                out << "w " << v << " " << (*weights)[v] << "\n";
    return out.str();
}

} // namespace kcenter
