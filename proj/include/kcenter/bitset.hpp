#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "kcenter/kernels.hpp"

namespace kcenter {

/// Fixed-width bitset over vertex ids; the word array is laid out for the
/// kernels in kcenter::kernels.
class DynBits {
public:
    DynBits() = default;
    explicit DynBits(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t* data() { return words_.data(); }
    const std::uint64_t* data() const { return words_.data(); }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void set_all() {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        trim();
    }

    void or_with(const DynBits& other) {
        kernels::active().or_words(words_.data(), other.words_.data(), words_.size());
    }

    void and_not(const DynBits& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
    }

    /// Lowest set bit index, -1 when empty.
    int lowest_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    std::uint64_t count() const {
        return kernels::active().popcount_words(words_.data(), words_.size());
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w)
                return true;
        return false;
    }

    /// True if `this` covers every bit of `other`.
    bool covers(const DynBits& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & ~words_[i])
                return false;
        return true;
    }

    bool operator==(const DynBits& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    /// Calls fn(i) for every set bit, ascending.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1)
                fn(static_cast<int>(wi * 64 + std::countr_zero(w)));
    }

    std::vector<int> to_vertices() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace kcenter
