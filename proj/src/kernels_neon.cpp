// NEON variants of the GF(2) word kernels for aarch64 builds.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "symdec/kernels.hpp"

namespace symdec::kernels {

namespace {

void xor_into_neon(uint64_t* dst, const uint64_t* src, size_t nwords) {
    size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < nwords; i++) {
        dst[i] ^= src[i];
    }
}

inline size_t popcount_u64x2(uint64x2_t v) {
    uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    return static_cast<size_t>(vaddvq_u8(bytes));
}

size_t and_popcount_neon(const uint64_t* a, const uint64_t* b, size_t nwords) {
    size_t total = 0;
    size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        total += popcount_u64x2(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i] & b[i]));
    }
    return total;
}

size_t or_popcount_neon(const uint64_t* a, const uint64_t* b, size_t nwords) {
    size_t total = 0;
    size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        total += popcount_u64x2(vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i] | b[i]));
    }
    return total;
}

size_t popcount_neon(const uint64_t* a, size_t nwords) {
    size_t total = 0;
    size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        total += popcount_u64x2(vld1q_u64(a + i));
    }
    for (; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i]));
    }
    return total;
}

}  // namespace

const Ops neon_ops{xor_into_neon, and_popcount_neon, or_popcount_neon, popcount_neon,
                   "neon"};

}  // namespace symdec::kernels

#endif  // aarch64
