#pragma once

#include <cstdint>
#include <vector>

#include "kcenter/graph.hpp"

namespace kcenter {

/// One candidate set of a set system: a subset of the universe (bitmask over
/// universe positions), the vertex that owns it, and a positive weight.
struct CoverSet {
    std::uint32_t mask = 0;
    int owner = 0;
    std::int64_t weight = 1;
};

/// A set system over a small ordered universe. The universe cap bounds the
/// 2^|U| cover table; the default of 24 means at most ~16M table entries.
struct SetSystem {
    static constexpr int kDefaultUniverseCap = 24;

    std::vector<int> universe; // element labels (e.g. vertex ids), ascending
    std::vector<CoverSet> sets;
    int universe_cap = kDefaultUniverseCap;
};

/// Minimum-weight set covers for every subset of the universe, built once by
/// dynamic programming and then read in constant time. Entries break weight
/// ties by the lexicographically smallest choice sequence, where choices
/// repeatedly cover the lowest-index uncovered element with the
/// lowest-indexed optimal set.
class CoverTable {
public:
    struct Cover {
        bool feasible = false;
        std::int64_t weight = 0;
        std::vector<int> set_indices; // in choice order
    };

    CoverTable(int universe_size, std::vector<CoverSet> sets,
               std::vector<std::uint32_t> weight, std::vector<std::int32_t> choice);

    int universe_size() const { return universe_size_; }
    std::uint32_t full_mask() const {
        return universe_size_ == 32 ? ~std::uint32_t{0}
                                    : (std::uint32_t{1} << universe_size_) - 1;
    }

    /// The stored optimum for a subset of the universe; no recomputation.
    Cover lookup(std::uint32_t subset_mask) const;

    bool feasible(std::uint32_t subset_mask) const;
    std::int64_t weight_of(std::uint32_t subset_mask) const;

    /// Walks the stored optimal cover, calling fn(set_index) per chosen set.
    template <typename Fn>
    bool walk(std::uint32_t subset_mask, Fn&& fn) const {
        std::uint32_t mask = subset_mask;
        while (mask != 0) {
            std::int32_t s = choice_[mask];
            if (s < 0)
                return false;
            fn(static_cast<int>(s));
            mask &= ~sets_[s].mask;
        }
        return true;
    }

    const std::vector<CoverSet>& sets() const { return sets_; }

private:
    void check_mask(std::uint32_t subset_mask) const;

    int universe_size_;
    std::vector<CoverSet> sets_;
    std::vector<std::uint32_t> weight_; // kInfeasibleWeight when uncoverable
    std::vector<std::int32_t> choice_;  // chosen set index, -1 for empty mask
};

/// Builds the full table in 2^|U| * O(|S|) time. Throws CapacityError when
/// the universe exceeds the cap and ValidationError on malformed systems.
CoverTable build_table(const SetSystem& system);

/// Minimum dominating set of a graph via a known vertex cover W: guess
/// D1 = W ∩ D (2^|W| outcomes), force the W-independent vertices that D1
/// leaves undominated, and close the remaining gap with one pre-built cover
/// table over universe W. Exact; |W| is capped like a universe.
std::vector<int> dominating_set_via_vc(const Graph& g, const std::vector<int>& vertex_cover);

} // namespace kcenter
