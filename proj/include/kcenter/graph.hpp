#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kcenter/scaling.hpp"

namespace kcenter {

/// One undirected edge; u < v always, length in edge units (see LengthScale).
struct Edge {
    int u = 0;
    int v = 0;
    std::int64_t length = 0;
};

struct EdgeInput {
    int u = 0;
    int v = 0;
    Decimal length;
};

/// Edge-weighted undirected graph with positive lengths. Vertices are ids
/// 0..n-1. Immutable after construction and safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<Edge> edges; // sorted by (u, v), no duplicates
    LengthScale scale;

    std::int64_t dist_units(std::string_view decimal_text) const {
        return scale.dist_units(decimal_text);
    }

    /// Neighbor lists (id-ascending) with lengths in distance units.
    std::vector<std::vector<std::pair<int, std::int64_t>>> adjacency_dist_units() const;

    int component_count() const;
};

/// Validates and normalizes the input: positive lengths, no self-loops or
/// duplicates, endpoints in range. The common scale is the finest fractional
/// precision used by any edge; insertion order does not matter.
Graph build_graph(int n, const std::vector<EdgeInput>& edges);

/// Convenience for generator code: lengths already integral at 10^0.
Graph build_graph_unit_scale(int n, const std::vector<std::tuple<int, int, std::int64_t>>& edges);

/// Parsed "n m / u v length / w v weight" text (see README for the format).
struct GraphFile {
    Graph graph;
    std::optional<std::vector<std::int64_t>> weights; // per-vertex, >= 1
};

GraphFile parse_graph_text(std::istream& in);
GraphFile load_graph_file(const std::string& path);
std::string write_graph_text(const Graph& g,
                             const std::vector<std::int64_t>* weights = nullptr);

} // namespace kcenter
