// AVX2 kernel variants. Compiled with -mavx2 and only reached after a
// runtime CPU check; every function mirrors its scalar reference in
// kernels.cpp and is equivalence-tested against it.

#include "kcenter/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>
#include <cstring>
#include <limits>

namespace kcenter::kernels {

namespace {

// min(a, b) on 64-bit lanes (AVX2 has no native epi64 min).
inline __m256i min_epi64(__m256i a, __m256i b) {
    __m256i a_gt = _mm256_cmpgt_epi64(a, b);
    return _mm256_blendv_epi8(a, b, a_gt);
}

void avx2_min_plus_relax(std::int64_t* row_i, const std::int64_t* row_k,
                         std::int64_t via, std::size_t n) {
    const __m256i v_via = _mm256_set1_epi64x(via);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_i + j));
        __m256i thru = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_k + j));
        __m256i cand = _mm256_add_epi64(thru, v_via);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row_i + j), min_epi64(cur, cand));
    }
    for (; j < n; ++j) {
        std::int64_t cand = via + row_k[j];
        if (cand < row_i[j])
            row_i[j] = cand;
    }
}

void avx2_min_rows(std::int64_t* acc, const std::int64_t* row, std::size_t n) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j), min_epi64(a, b));
    }
    for (; j < n; ++j)
        if (row[j] < acc[j])
            acc[j] = row[j];
}

std::int64_t avx2_max_reduce(const std::int64_t* v, std::size_t n) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::size_t j = 0;
    if (n >= 4) {
        __m256i vbest = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
        j = 4;
        for (; j + 4 <= n; j += 4) {
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j));
            __m256i b_gt = _mm256_cmpgt_epi64(b, vbest);
            vbest = _mm256_blendv_epi8(vbest, b, b_gt);
        }
        alignas(32) std::int64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vbest);
        for (std::int64_t lane : lanes)
            if (lane > best)
                best = lane;
    }
    for (; j < n; ++j)
        if (v[j] > best)
            best = v[j];
    return best;
}

std::size_t avx2_count_leq(const std::int64_t* v, std::size_t n, std::int64_t bound) {
    const __m256i v_bound = _mm256_set1_epi64x(bound);
    std::size_t count = 0;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j));
        __m256i gt = _mm256_cmpgt_epi64(a, v_bound); // a > bound
        unsigned bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(gt)));
        count += 4u - std::popcount(bits);
    }
    for (; j < n; ++j)
        count += v[j] <= bound;
    return count;
}

void avx2_mask_leq(const std::int64_t* v, std::size_t n, std::int64_t bound,
                   std::uint64_t* out_words) {
    const __m256i v_bound = _mm256_set1_epi64x(bound);
    std::size_t nwords = (n + 63) / 64;
    std::memset(out_words, 0, nwords * sizeof(std::uint64_t));
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j));
        __m256i gt = _mm256_cmpgt_epi64(a, v_bound);
        std::uint64_t bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(gt)));
        out_words[j >> 6] |= (~bits & 0xFull) << (j & 63);
    }
    for (; j < n; ++j)
        if (v[j] <= bound)
            out_words[j >> 6] |= std::uint64_t{1} << (j & 63);
}

void avx2_or_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
    }
    for (; i < nwords; ++i)
        dst[i] |= src[i];
}

std::uint64_t avx2_popcount_words(const std::uint64_t* w, std::size_t nwords) {
    // Nibble-LUT popcount over 256-bit blocks, summed with sad_epu8.
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0F);
    __m256i total = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        __m256i lo = _mm256_and_si256(a, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi64(a, 4), low_mask);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                      _mm256_shuffle_epi8(lut, hi));
        total = _mm256_add_epi64(total, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
    std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i)
        sum += std::popcount(w[i]);
    return sum;
}

constexpr Ops kAvx2Ops{
    avx2_min_plus_relax, avx2_min_rows,  avx2_max_reduce, avx2_count_leq,
    avx2_mask_leq,       avx2_or_words,  avx2_popcount_words,
};

} // namespace

const Ops& avx2_ops() { return kAvx2Ops; }

bool avx2_cpu_supported() {
    return __builtin_cpu_supports("avx2");
}

} // namespace kcenter::kernels

#endif // __AVX2__
