#pragma once

#include <cstddef>
#include <cstdint>

namespace kcenter::kernels {

// Data-parallel inner loops shared by the distance oracle and the solvers:
// min-plus row relaxation (all-pairs shortest paths), row-wise min / max
// reduction (covering-cost evaluation), threshold counting and mask building
// (ball queries), and word-wise bitset arithmetic (coverage tests).
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime. The two are equivalence-tested; callers go
// through active() and never observe which variant ran. The KCENTER_KERNELS
// environment variable ("scalar" or "avx2") forces a backend.

enum class Backend { scalar, avx2 };

struct Ops {
    // row_i[j] = min(row_i[j], via + row_k[j]) for j in [0, n)
    void (*min_plus_relax)(std::int64_t* row_i, const std::int64_t* row_k,
                           std::int64_t via, std::size_t n);
    // acc[j] = min(acc[j], row[j])
    void (*min_rows)(std::int64_t* acc, const std::int64_t* row, std::size_t n);
    // max over v[0..n); INT64_MIN for n == 0
    std::int64_t (*max_reduce)(const std::int64_t* v, std::size_t n);
    // |{j : v[j] <= bound}|
    std::size_t (*count_leq)(const std::int64_t* v, std::size_t n, std::int64_t bound);
    // out_words bit j set iff v[j] <= bound; bits beyond n are cleared.
    // out_words must hold (n + 63) / 64 words.
    void (*mask_leq)(const std::int64_t* v, std::size_t n, std::int64_t bound,
                     std::uint64_t* out_words);
    // dst[i] |= src[i]
    void (*or_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    std::uint64_t (*popcount_words)(const std::uint64_t* w, std::size_t nwords);
};

/// The backend picked at startup (AVX2 when the CPU supports it).
const Ops& active();
Backend active_backend();

/// True if the backend can run on this machine.
bool supported(Backend b);

/// Forces a backend; returns false (and changes nothing) if unsupported.
bool set_backend(Backend b);

/// Direct access for equivalence tests.
const Ops& ops(Backend b);

const char* backend_name(Backend b);

} // namespace kcenter::kernels
