#include "kcenter/instance_lab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "kcenter/errors.hpp"

namespace kcenter {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// a/b < c/d for positive rationals.
bool frac_less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return static_cast<i128>(a) * d < static_cast<i128>(c) * b;
}

std::uint64_t isqrt_u128(u128 x) {
    std::uint64_t r = 0;
    for (int b = 63; b >= 0; --b) {
        std::uint64_t cand = r | (std::uint64_t{1} << b);
        if (static_cast<u128>(cand) * cand <= x)
            r = cand;
    }
    return r;
}

std::uint64_t ceil_sqrt_u128(u128 x) {
    std::uint64_t s = isqrt_u128(x);
    return static_cast<u128>(s) * s == x ? s : s + 1;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n; // modulo bias is immaterial here; keeps runs portable
}

} // namespace

std::int64_t PointMetric::min_entry() const {
    std::int64_t best = INT64_MAX;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            best = std::min(best, entry(u, v));
    return best;
}

std::int64_t PointMetric::max_entry() const {
    std::int64_t best = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            best = std::max(best, entry(u, v));
    return best;
}

void PointMetric::validate() const {
    if (n < 2)
        throw ValidationError("point metric needs at least two points");
    for (int u = 0; u < n; ++u) {
        if (entry(u, u) != 0)
            throw ValidationError("metric diagonal must be zero");
        for (int v = 0; v < n; ++v) {
            if (entry(u, v) != entry(v, u))
                throw ValidationError("metric must be symmetric");
            if (u != v && entry(u, v) <= 0)
                throw ValidationError("off-diagonal metric entries must be positive");
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (entry(u, w) > entry(u, v) + entry(v, w))
                    throw ValidationError("metric violates the triangle inequality");
}

PointMetric PointMetric::from_points(const std::vector<std::vector<Decimal>>& coords,
                                     Norm norm, int doubling_dim) {
    const int n = static_cast<int>(coords.size());
    if (n < 2)
        throw ValidationError("point metric needs at least two points");
    const std::size_t dim = coords.front().size();
    int frac = 0;
    for (const auto& row : coords) {
        if (row.size() != dim)
            throw ValidationError("inconsistent point dimension");
        for (const Decimal& c : row)
            frac = std::max(frac, c.frac_digits);
    }
    LengthScale cs(frac);
    std::vector<std::vector<std::int64_t>> pts(n, std::vector<std::int64_t>(dim));
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            pts[i][j] = cs.edge_units(coords[i][j]);
            if (std::abs(pts[i][j]) > std::int64_t{1} << 31)
                throw ValidationError("coordinate magnitude too large at this precision");
        }

    PointMetric m;
    m.n = n;
    m.doubling_dim = doubling_dim;
    constexpr std::int64_t kL2Quant = 1000; // extra digits for L2 round-up
    m.scale = norm == Norm::l2 ? cs.edge_factor() * kL2Quant : cs.edge_factor();
    m.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::int64_t val = 0;
            switch (norm) {
            case Norm::l1:
                for (std::size_t j = 0; j < dim; ++j)
                    val += std::abs(pts[u][j] - pts[v][j]);
                break;
            case Norm::linf:
                for (std::size_t j = 0; j < dim; ++j)
                    val = std::max(val, std::abs(pts[u][j] - pts[v][j]));
                break;
            case Norm::l2: {
                u128 sq = 0;
                for (std::size_t j = 0; j < dim; ++j) {
                    i128 d = pts[u][j] - pts[v][j];
                    sq += static_cast<u128>(d * d);
                }
                val = static_cast<std::int64_t>(
                    ceil_sqrt_u128(sq * static_cast<u128>(kL2Quant) * kL2Quant));
                break;
            }
            }
            m.entries[static_cast<std::size_t>(u) * n + v] = val;
            m.entries[static_cast<std::size_t>(v) * n + u] = val;
        }
    m.validate();
    return m;
}

PointMetric PointMetric::from_matrix(int n, const std::vector<std::vector<Decimal>>& rows,
                                     int doubling_dim) {
    if (static_cast<int>(rows.size()) != n)
        throw ValidationError("matrix row count does not match n");
    int frac = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("matrix row width does not match n");
        for (const Decimal& c : row)
            frac = std::max(frac, c.frac_digits);
    }
    LengthScale cs(frac);
    PointMetric m;
    m.n = n;
    m.scale = cs.edge_factor();
    m.doubling_dim = doubling_dim;
    m.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            m.entries[static_cast<std::size_t>(u) * n + v] = cs.edge_units(rows[u][v]);
    m.validate();
    return m;
}

EmbedResult embed_doubling(const PointMetric& metric, std::int64_t eps_num,
                           std::int64_t eps_den) {
    metric.validate();
    if (eps_num < 1 || eps_den < 2 || eps_num >= eps_den)
        throw ValidationError("epsilon must satisfy 0 < eps < 1");
    std::int64_t g = gcd64(eps_num, eps_den);
    const std::int64_t p = eps_num / g, q = eps_den / g;
    if (q > 1000)
        throw ValidationError("epsilon denominator above 1000 is not supported");

    const int n = metric.n;
    const std::int64_t m_min = metric.min_entry();
    const std::int64_t m_max = metric.max_entry();
    if (m_max / m_min > (std::int64_t{1} << 40))
        throw ValidationError("metric aspect ratio too large to embed exactly");
    // Keeps every 128-bit certificate comparison far from overflow.
    if (m_max > 1000000000000000)
        throw ValidationError("metric entries above 10^15 are not supported");

    // Rescaled metric: distance of (u,v) is N(u,v) / D with minimum exactly
    // 2/(1+eps) = 2q/(p+q).
    const std::int64_t metric_den = (p + q) * m_min;
    std::vector<std::int64_t> metric_num(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < metric_num.size(); ++i)
        metric_num[i] = 2 * q * metric.entries[i];

    // L = max(1, ceil(log2 alpha)); the clamp keeps 1 - i/L defined when
    // alpha = 1.
    int top = 1;
    while ((i128{1} << top) * m_min < m_max)
        ++top;

    NetHierarchy hier;
    hier.top_level = top;
    hier.eps_num = p;
    hier.eps_den = q;

    NetLevel base;
    base.members.resize(n);
    std::iota(base.members.begin(), base.members.end(), 0);
    base.radius = Frac{0, 1};
    hier.levels.push_back(std::move(base));

    auto scaled_dist_gt = [&](int u, int v, const Frac& f) {
        // N(u,v)/D > f.num/f.den
        return static_cast<i128>(metric_num[static_cast<std::size_t>(u) * n + v]) * f.den >
               static_cast<i128>(f.num) * metric_den;
    };

    for (int i = 1; i <= top; ++i) {
        // rho_i = eps * 2^(i-3) / ((1+eps)^2 L) = p*q*2^i / (8 (p+q)^2 L)
        Frac rho;
        rho.num = p * q * (std::int64_t{1} << i);
        rho.den = 8 * (p + q) * (p + q) * static_cast<std::int64_t>(top);
        std::int64_t rg = gcd64(rho.num, rho.den);
        rho.num /= rg;
        rho.den /= rg;

        NetLevel level;
        level.radius = rho;
        for (int y : hier.levels[i - 1].members) {
            bool far_from_all = true;
            for (int z : level.members)
                if (!scaled_dist_gt(y, z, rho)) {
                    far_from_all = false;
                    break;
                }
            if (far_from_all)
                level.members.push_back(y);
        }
        hier.levels.push_back(std::move(level));
    }

    // Highest level holding each vertex; nesting makes co-residence of a
    // pair the min of the two.
    std::vector<int> level_of(n, 0);
    for (int i = 1; i <= top; ++i)
        for (int v : hier.levels[i].members)
            level_of[v] = i;

    // Edge for every pair at its largest co-resident level i, of length
    // (1 + eps(1 - i/L)) * dist = (qL + p(L-i))/(qL) * N/D. All lengths
    // share the denominator qL*D; the numerators are divided by their gcd
    // and emitted as exact integer lengths.
    std::vector<std::int64_t> numer(static_cast<std::size_t>(n) * n, 0);
    std::int64_t common = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int i = std::min(level_of[u], level_of[v]);
            i128 e = static_cast<i128>(q * static_cast<std::int64_t>(top) +
                                       p * static_cast<std::int64_t>(top - i)) *
                     metric_num[static_cast<std::size_t>(u) * n + v];
            if (e > (i128{1} << 62))
                throw ValidationError("embedded edge length exceeds the exact integer range");
            numer[static_cast<std::size_t>(u) * n + v] = static_cast<std::int64_t>(e);
            common = gcd64(common, static_cast<std::int64_t>(e));
        }
    if (common == 0)
        common = 1;

    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v, numer[static_cast<std::size_t>(u) * n + v] / common);

    EmbedResult out;
    out.graph = build_graph_unit_scale(n, edges);
    out.hierarchy = std::move(hier);
    out.doubling_dim = metric.doubling_dim;
    out.unit_num = common;
    out.unit_den = q * static_cast<std::int64_t>(top) * metric_den;
    out.metric_den = metric_den;
    out.metric_num = std::move(metric_num);

    // Hard distortion certificate on exact values: for the rescaled metric,
    //   N/D <= dist_G <= (1+eps) N/D.
    // dist_G value is DG * unit_num / (2 q L D) with DG in doubled distance
    // units; D cancels against the metric side, so the comparisons stay
    // small: DG * unit_num vs 2 q L N and its (p+q)/q multiple.
    DistanceOracle oracle = all_pairs(out.graph);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            i128 lhs = static_cast<i128>(oracle.dist(u, v)) * out.unit_num;
            i128 lo = static_cast<i128>(out.metric_entry(u, v)) * 2 * q *
                      static_cast<std::int64_t>(top);
            if (lhs < lo || lhs * q > lo * (p + q))
                throw ValidationError("embedding distortion certificate failed for pair (" +
                                      std::to_string(u) + ", " + std::to_string(v) + ")");
        }
    return out;
}

namespace {

// Level index i with dist_G(u,v) in (2^i, 2^{i+1}], or -1 below/above range.
int band_of(const EmbedResult& emb, const DistanceOracle& oracle, int u, int v) {
    i128 value_num = static_cast<i128>(oracle.dist(u, v)) * emb.unit_num;
    i128 den = static_cast<i128>(2) * emb.unit_den;
    if (value_num <= den) // value <= 1: below every band
        return -1;
    for (int i = 0; i <= emb.hierarchy.top_level; ++i)
        if (value_num <= (den << (i + 1)))
            return i;
    return -1;
}

} // namespace

HierarchyCertificate certify_hub_hierarchy(const EmbedResult& emb,
                                           const DistanceOracle& oracle) {
    const int n = emb.graph.n;
    HierarchyCertificate cert;

    std::vector<std::vector<bool>> member(emb.hierarchy.levels.size(),
                                          std::vector<bool>(n, false));
    for (std::size_t i = 0; i < emb.hierarchy.levels.size(); ++i)
        for (int v : emb.hierarchy.levels[i].members)
            member[i][v] = true;

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int band = band_of(emb, oracle, u, v);
            if (band < 0)
                continue;
            bool hit = false;
            for (int x : oracle.canonical_path(u, v))
                if (member[band][x]) {
                    hit = true;
                    break;
                }
            if (!hit)
                cert.violations.emplace_back(u, v, band);
        }

    // Measured sparsity of each level as an SPC at scale 2^i: hubs of Y_i in
    // balls of value-radius 2^(i+1), converted to integer distance units by
    // flooring (distances are integers, so the predicate is unchanged).
    const std::int64_t p = emb.hierarchy.eps_num, q = emb.hierarchy.eps_den;
    const std::int64_t L = emb.hierarchy.top_level;
    for (int i = 0; i <= emb.hierarchy.top_level; ++i) {
        HierarchyCertificate::LevelReport rep;
        rep.level = i;
        rep.size = static_cast<int>(emb.hierarchy.levels[i].members.size());
        i128 radius_units = ((i128{2} * emb.unit_den) << (i + 1)) / emb.unit_num;
        int best = 0;
        for (int v = 0; v < n; ++v) {
            int count = 0;
            for (int h : emb.hierarchy.levels[i].members)
                if (static_cast<i128>(oracle.dist(v, h)) <= radius_units)
                    ++count;
            best = std::max(best, count);
        }
        rep.sparsity = best;
        // sparsity <= (128 (1+eps)^2 L / eps)^dim, cross-multiplied; once the
        // numerator dwarfs any possible count the bound holds trivially.
        i128 num = 1, den = 1;
        bool huge = false;
        for (int e = 0; e < emb.doubling_dim; ++e) {
            num *= static_cast<i128>(128) * L * (p + q) * (p + q);
            den *= static_cast<i128>(q) * p;
            if (num / den > static_cast<i128>(1) << 62) {
                huge = true;
                break;
            }
        }
        rep.within_bound = huge || static_cast<i128>(rep.sparsity) * den <= num;
        cert.levels.push_back(rep);
    }
    return cert;
}

HierarchyCertificate certify_hub_hierarchy(const EmbedResult& emb) {
    DistanceOracle oracle = all_pairs(emb.graph);
    return certify_hub_hierarchy(emb, oracle);
}

bool net_levels_valid(const EmbedResult& emb) {
    const int n = emb.graph.n;
    auto dist_gt = [&](int u, int v, const Frac& f) {
        return static_cast<i128>(emb.metric_entry(u, v)) * f.den >
               static_cast<i128>(f.num) * emb.metric_den;
    };
    for (std::size_t i = 1; i < emb.hierarchy.levels.size(); ++i) {
        const NetLevel& level = emb.hierarchy.levels[i];
        const NetLevel& prev = emb.hierarchy.levels[i - 1];
        // packing: members pairwise farther than rho_i
        for (std::size_t a = 0; a < level.members.size(); ++a)
            for (std::size_t b = a + 1; b < level.members.size(); ++b)
                if (!dist_gt(level.members[a], level.members[b], level.radius))
                    return false;
        // cover: every previous-level vertex within rho_i of some member
        for (int y : prev.members) {
            bool covered = false;
            for (int z : level.members)
                if (!dist_gt(y, z, level.radius)) {
                    covered = true;
                    break;
                }
            if (!covered)
                return false;
        }
        // nesting
        std::vector<bool> in_prev(n, false);
        for (int y : prev.members)
            in_prev[y] = true;
        for (int z : level.members)
            if (!in_prev[z])
                return false;
    }
    return true;
}

Graph reduce_dominating_set(const Graph& g) {
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    edges.reserve(g.edges.size());
    for (const Edge& e : g.edges)
        edges.emplace_back(e.u, e.v, 1);
    return build_graph_unit_scale(g.n, edges);
}

Graph gen_grid(int w, int h) {
    if (w < 1 || h < 1)
        throw ValidationError("grid dimensions must be positive");
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    auto id = [w](int x, int y) { return y * w + x; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w)
                edges.emplace_back(id(x, y), id(x + 1, y), 1);
            if (y + 1 < h)
                edges.emplace_back(id(x, y), id(x, y + 1), 1);
        }
    return build_graph_unit_scale(w * h, edges);
}

Graph gen_random_connected(int n, int m, int max_len, std::uint64_t seed) {
    if (n < 1)
        throw ValidationError("vertex count must be positive");
    if (m < n - 1)
        throw ValidationError("need at least n-1 edges for connectivity");
    if (static_cast<std::int64_t>(m) > static_cast<std::int64_t>(n) * (n - 1) / 2)
        throw ValidationError("more edges than a simple graph allows");
    if (max_len < 1)
        throw ValidationError("max length must be positive");

    std::mt19937_64 rng(seed);
    std::set<std::pair<int, int>> used;
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rand_below(rng, v));
        used.emplace(std::min(parent, v), std::max(parent, v));
        edges.emplace_back(parent, v, 1 + static_cast<std::int64_t>(rand_below(rng, max_len)));
    }
    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(rand_below(rng, n));
        int v = static_cast<int>(rand_below(rng, n));
        if (u == v)
            continue;
        auto key = std::minmax(u, v);
        if (used.count({key.first, key.second}))
            continue;
        used.insert({key.first, key.second});
        edges.emplace_back(key.first, key.second,
                           1 + static_cast<std::int64_t>(rand_below(rng, max_len)));
    }
    return build_graph_unit_scale(n, edges);
}

Graph gen_cubic_instance(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw ValidationError("cubic graphs need even n >= 4");
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::mt19937_64 rng(seed * 1000003ull + attempt);
        std::vector<int> stubs;
        stubs.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < 3; ++c)
                stubs.push_back(v);
        for (std::size_t i = stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rand_below(rng, i + 1)]);

        std::set<std::pair<int, int>> used;
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            auto key = std::minmax(u, v);
            if (!used.insert({key.first, key.second}).second) {
                simple = false;
                break;
            }
        }
        if (!simple)
            continue;
        std::vector<std::tuple<int, int, std::int64_t>> edges;
        for (const auto& [u, v] : used)
            edges.emplace_back(u, v, 1);
        Graph g = build_graph_unit_scale(n, edges);
        if (g.component_count() == 1)
            return g;
    }
    throw ValidationError("failed to sample a connected cubic graph for this seed");
}

PointMetric parse_point_file(std::istream& in, int doubling_dim) {
    std::string line;
    std::vector<std::string> payload;
    std::string header;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        if (header.empty())
            header = line;
        else
            payload.push_back(line);
    }
    if (header.empty())
        throw ValidationError("point file: missing header");

    std::istringstream hs(header);
    std::string kind;
    hs >> kind;
    auto parse_row = [&](const std::string& text, std::size_t expect) {
        std::istringstream rs(text);
        std::vector<Decimal> row;
        std::string tok;
        while (rs >> tok)
            row.push_back(Decimal::parse(tok));
        if (expect && row.size() != expect)
            throw ValidationError("point file: expected " + std::to_string(expect) +
                                  " values per line");
        return row;
    };

    if (kind == "points") {
        int n = 0, dim = 0;
        std::string norm_text;
        if (!(hs >> n >> dim >> norm_text) || n < 2 || dim < 1)
            throw ValidationError("point file: header must be 'points n dim {l1|l2|linf}'");
        Norm norm;
        if (norm_text == "l1")
            norm = Norm::l1;
        else if (norm_text == "l2")
            norm = Norm::l2;
        else if (norm_text == "linf")
            norm = Norm::linf;
        else
            throw ValidationError("point file: unknown norm '" + norm_text + "'");
        if (static_cast<int>(payload.size()) != n)
            throw ValidationError("point file: expected " + std::to_string(n) + " point lines");
        std::vector<std::vector<Decimal>> coords;
        for (const std::string& text : payload)
            coords.push_back(parse_row(text, dim));
        return PointMetric::from_points(coords, norm, doubling_dim);
    }
    if (kind == "matrix") {
        int n = 0;
        if (!(hs >> n) || n < 2)
            throw ValidationError("point file: header must be 'matrix n'");
        if (static_cast<int>(payload.size()) != n)
            throw ValidationError("point file: expected " + std::to_string(n) + " matrix rows");
        std::vector<std::vector<Decimal>> rows;
        for (const std::string& text : payload)
            rows.push_back(parse_row(text, n));
        return PointMetric::from_matrix(n, rows, doubling_dim);
    }
    throw ValidationError("point file: unknown header kind '" + kind + "'");
}

PointMetric load_point_file(const std::string& path, int doubling_dim) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open point file: " + path);
    return parse_point_file(in, doubling_dim);
}

} // namespace kcenter
