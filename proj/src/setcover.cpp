#include "kcenter/setcover.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "kcenter/errors.hpp"

namespace kcenter {

namespace {

constexpr std::uint32_t kInfeasibleWeight = std::numeric_limits<std::uint32_t>::max();

} // namespace

CoverTable::CoverTable(int universe_size, std::vector<CoverSet> sets,
                       std::vector<std::uint32_t> weight, std::vector<std::int32_t> choice)
    : universe_size_(universe_size), sets_(std::move(sets)), weight_(std::move(weight)),
      choice_(std::move(choice)) {}

void CoverTable::check_mask(std::uint32_t subset_mask) const {
    if (subset_mask & ~full_mask())
        throw ValidationError("subset contains elements outside the universe");
}

bool CoverTable::feasible(std::uint32_t subset_mask) const {
    check_mask(subset_mask);
    return weight_[subset_mask] != kInfeasibleWeight;
}

std::int64_t CoverTable::weight_of(std::uint32_t subset_mask) const {
    check_mask(subset_mask);
    return weight_[subset_mask];
}

CoverTable::Cover CoverTable::lookup(std::uint32_t subset_mask) const {
    check_mask(subset_mask);
    Cover out;
    if (weight_[subset_mask] == kInfeasibleWeight)
        return out;
    out.feasible = true;
    out.weight = weight_[subset_mask];
    walk(subset_mask, [&](int s) { out.set_indices.push_back(s); });
    return out;
}

CoverTable build_table(const SetSystem& system) {
    const int u = static_cast<int>(system.universe.size());
    if (u > system.universe_cap)
        throw CapacityError("set-cover universe of size " + std::to_string(u) +
                            " exceeds the cap of " + std::to_string(system.universe_cap));
    if (u > 31)
        throw CapacityError("set-cover universe of size " + std::to_string(u) +
                            " exceeds the 31-element representation limit");

    const std::uint32_t full = u == 0 ? 0 : (std::uint32_t{1} << u) - 1;
    std::uint64_t weight_sum = 0;
    for (const CoverSet& s : system.sets) {
        if (s.weight < 1)
            throw ValidationError("set weights must be positive");
        if (s.mask & ~full)
            throw ValidationError("set contains elements outside the universe");
        weight_sum += static_cast<std::uint64_t>(s.weight);
    }
    if (weight_sum >= kInfeasibleWeight)
        throw CapacityError("total set weight too large for the cover table");
    for (std::size_t i = 1; i < system.sets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (system.sets[i].owner == system.sets[j].owner)
                throw ValidationError("duplicate owner id " +
                                      std::to_string(system.sets[i].owner) +
                                      " in set system");

    std::vector<std::uint32_t> weight(std::size_t{1} << u, kInfeasibleWeight);
    std::vector<std::int32_t> choice(std::size_t{1} << u, -1);
    weight[0] = 0;

    // Sets that contain a given element, ascending index.
    std::vector<std::vector<std::int32_t>> by_element(u);
    for (std::int32_t s = 0; s < static_cast<std::int32_t>(system.sets.size()); ++s)
        for (int e = 0; e < u; ++e)
            if (system.sets[s].mask >> e & 1)
                by_element[e].push_back(s);

    for (std::uint32_t mask = 1; mask <= full && u > 0; ++mask) {
        int e = std::countr_zero(mask);
        std::uint32_t best_w = kInfeasibleWeight;
        std::int32_t best_s = -1;
        for (std::int32_t s : by_element[e]) {
            std::uint32_t rest = mask & ~system.sets[s].mask;
            if (weight[rest] == kInfeasibleWeight)
                continue;
            std::uint32_t w = weight[rest] + static_cast<std::uint32_t>(system.sets[s].weight);
            if (w < best_w) { // ties keep the lowest set index
                best_w = w;
                best_s = s;
            }
        }
        weight[mask] = best_w;
        choice[mask] = best_s;
    }
    return CoverTable(u, system.sets, std::move(weight), std::move(choice));
}

std::vector<int> dominating_set_via_vc(const Graph& g, const std::vector<int>& vertex_cover) {
    const int n = g.n;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    std::vector<bool> in_cover(n, false);
    for (int v : vertex_cover) {
        if (v < 0 || v >= n)
            throw ValidationError("vertex cover entry out of range");
        in_cover[v] = true;
    }
    for (const Edge& e : g.edges)
        if (!in_cover[e.u] && !in_cover[e.v])
            throw ValidationError("input set is not a vertex cover: edge (" +
                                  std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") is uncovered");

    std::vector<int> cover_vertices; // W, ascending
    std::vector<int> independent;    // V \ W, ascending
    std::vector<int> cover_index(n, -1);
    for (int v = 0; v < n; ++v) {
        if (in_cover[v]) {
            cover_index[v] = static_cast<int>(cover_vertices.size());
            cover_vertices.push_back(v);
        } else {
            independent.push_back(v);
        }
    }
    const int w_size = static_cast<int>(cover_vertices.size());

    // Neighborhoods of independent vertices restricted to W, one table for
    // all 2^|W| guesses.
    SetSystem system;
    system.universe = cover_vertices;
    for (int v : independent) {
        CoverSet s;
        s.owner = v;
        for (int nb : adj[v])
            s.mask |= std::uint32_t{1} << cover_index[nb]; // nb is in W
        system.sets.push_back(s);
    }
    CoverTable table = build_table(system);

    std::vector<std::uint32_t> nbhd_w(n, 0); // N(v) ∩ W as a W-mask
    for (int v = 0; v < n; ++v)
        for (int nb : adj[v])
            if (in_cover[nb])
                nbhd_w[v] |= std::uint32_t{1} << cover_index[nb];

    std::vector<int> best;
    bool have_best = false;
    const std::uint32_t full = w_size == 0 ? 0 : (std::uint32_t{1} << w_size) - 1;
    for (std::uint32_t d1 = 0;; ++d1) {
        // Independent vertices left undominated by D1 must self-dominate.
        std::vector<int> d2;
        std::uint32_t dominated_w = d1; // W vertices dominated so far
        for (std::size_t i = 0; i < independent.size(); ++i) {
            int v = independent[i];
            if ((nbhd_w[v] & d1) == 0)
                d2.push_back(v);
        }
        for (int v : d2)
            dominated_w |= nbhd_w[v];
        for (int wi = 0; wi < w_size; ++wi)
            if (nbhd_w[cover_vertices[wi]] & d1)
                dominated_w |= std::uint32_t{1} << wi;

        std::uint32_t leftover = full & ~dominated_w;
        CoverTable::Cover closing = table.lookup(leftover);
        if (closing.feasible) {
            std::vector<int> candidate;
            for (int wi = 0; wi < w_size; ++wi)
                if (d1 >> wi & 1)
                    candidate.push_back(cover_vertices[wi]);
            candidate.insert(candidate.end(), d2.begin(), d2.end());
            for (int s : closing.set_indices)
                candidate.push_back(table.sets()[s].owner);
            std::sort(candidate.begin(), candidate.end());
            candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
            if (!have_best || candidate.size() < best.size()) {
                best = std::move(candidate);
                have_best = true;
            }
        }
        if (d1 == full)
            break;
    }

    // have_best is guaranteed: d1 = W dominates everything W touches, and
    // independent leftovers enter D2.
    return best;
}

} // namespace kcenter
