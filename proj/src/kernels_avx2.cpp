// AVX2 variants of the GF(2) word kernels. Compiled with -mavx2 for this
// translation unit only; callers reach it through runtime dispatch so the
// binary still runs on machines without AVX2.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "symdec/kernels.hpp"

namespace symdec::kernels {

namespace {

void xor_into_avx2(uint64_t* dst, const uint64_t* src, size_t nwords) {
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < nwords; i++) {
        dst[i] ^= src[i];
    }
}

inline size_t popcount_m256(__m256i v) {
    // Lane-wise extraction with the POPCNT instruction beats table tricks at
    // the vector lengths seen here (tens of words).
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return static_cast<size_t>(__builtin_popcountll(lanes[0])) +
           static_cast<size_t>(__builtin_popcountll(lanes[1])) +
           static_cast<size_t>(__builtin_popcountll(lanes[2])) +
           static_cast<size_t>(__builtin_popcountll(lanes[3]));
}

size_t and_popcount_avx2(const uint64_t* a, const uint64_t* b, size_t nwords) {
    size_t total = 0;
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        total += popcount_m256(_mm256_and_si256(x, y));
    }
    for (; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i] & b[i]));
    }
    return total;
}

size_t or_popcount_avx2(const uint64_t* a, const uint64_t* b, size_t nwords) {
    size_t total = 0;
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        total += popcount_m256(_mm256_or_si256(x, y));
    }
    for (; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i] | b[i]));
    }
    return total;
}

size_t popcount_avx2(const uint64_t* a, size_t nwords) {
    size_t total = 0;
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        total += popcount_m256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    }
    for (; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i]));
    }
    return total;
}

}  // namespace

const Ops avx2_ops{xor_into_avx2, and_popcount_avx2, or_popcount_avx2, popcount_avx2,
                   "avx2"};

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace symdec::kernels

#endif  // x86-64
