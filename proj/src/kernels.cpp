#include "kcenter/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace kcenter::kernels {

namespace {

void scalar_min_plus_relax(std::int64_t* row_i, const std::int64_t* row_k,
                           std::int64_t via, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t cand = via + row_k[j];
        if (cand < row_i[j])
            row_i[j] = cand;
    }
}

void scalar_min_rows(std::int64_t* acc, const std::int64_t* row, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j)
        if (row[j] < acc[j])
            acc[j] = row[j];
}

std::int64_t scalar_max_reduce(const std::int64_t* v, std::size_t n) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t j = 0; j < n; ++j)
        best = std::max(best, v[j]);
    return best;
}

std::size_t scalar_count_leq(const std::int64_t* v, std::size_t n, std::int64_t bound) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j)
        count += v[j] <= bound;
    return count;
}

void scalar_mask_leq(const std::int64_t* v, std::size_t n, std::int64_t bound,
                     std::uint64_t* out_words) {
    std::size_t nwords = (n + 63) / 64;
    std::memset(out_words, 0, nwords * sizeof(std::uint64_t));
    for (std::size_t j = 0; j < n; ++j)
        if (v[j] <= bound)
            out_words[j >> 6] |= std::uint64_t{1} << (j & 63);
}

void scalar_or_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        dst[i] |= src[i];
}

std::uint64_t scalar_popcount_words(const std::uint64_t* w, std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        total += std::popcount(w[i]);
    return total;
}

constexpr Ops kScalarOps{
    scalar_min_plus_relax, scalar_min_rows,  scalar_max_reduce,
    scalar_count_leq,      scalar_mask_leq,  scalar_or_words,
    scalar_popcount_words,
};

Backend pick_default() {
#if defined(KCENTER_HAVE_AVX2)
    const char* forced = std::getenv("KCENTER_KERNELS");
    if (forced) {
        if (std::strcmp(forced, "scalar") == 0)
            return Backend::scalar;
        if (std::strcmp(forced, "avx2") == 0 && supported(Backend::avx2))
            return Backend::avx2;
    }
    if (supported(Backend::avx2))
        return Backend::avx2;
#else
    (void)std::getenv("KCENTER_KERNELS");
#endif
    return Backend::scalar;
}

std::atomic<Backend> g_backend{pick_default()};

} // namespace

#if defined(KCENTER_HAVE_AVX2)
const Ops& avx2_ops();     // kernels_avx2.cpp
bool avx2_cpu_supported(); // kernels_avx2.cpp
#endif

const Ops& ops(Backend b) {
#if defined(KCENTER_HAVE_AVX2)
    if (b == Backend::avx2)
        return avx2_ops();
#endif
    (void)b;
    return kScalarOps;
}

bool supported(Backend b) {
    if (b == Backend::scalar)
        return true;
#if defined(KCENTER_HAVE_AVX2)
    return avx2_cpu_supported();
#else
    return false;
#endif
}

const Ops& active() {
    return ops(g_backend.load(std::memory_order_relaxed));
}

Backend active_backend() {
    return g_backend.load(std::memory_order_relaxed);
}

bool set_backend(Backend b) {
    if (!supported(b))
        return false;
    g_backend.store(b, std::memory_order_relaxed);
    return true;
}

const char* backend_name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

} // namespace kcenter::kernels
