#pragma once

#include <cstddef>
#include <cstdint>

// Word-level GF(2) kernels used by the bit-packed Pauli/linear-algebra layer.
// Scalar reference implementations always exist; on x86-64 an AVX2 variant is
// selected at runtime when the CPU supports it, and on aarch64 a NEON variant
// is compiled in. All variants are equivalence-tested against the scalar
// reference.

namespace symdec::kernels {

struct Ops {
    // dst[i] ^= src[i]
    void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t nwords);
    // popcount of a[i] & b[i] summed over words
    size_t (*and_popcount)(const uint64_t* a, const uint64_t* b, size_t nwords);
    // popcount of a[i] | b[i] summed over words
    size_t (*or_popcount)(const uint64_t* a, const uint64_t* b, size_t nwords);
    // popcount of a
    size_t (*popcount)(const uint64_t* a, size_t nwords);
    const char* name;
};

// Active backend (dispatched once at startup).
const Ops& active();

// Scalar reference backend, for equivalence tests.
const Ops& scalar();

// Force a specific backend (tests only). Pass nullptr to restore dispatch.
void force_backend(const Ops* ops);

// Backends compiled into this binary (scalar always; avx2/neon as available).
extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
bool cpu_has_avx2();
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

inline void xor_into(uint64_t* dst, const uint64_t* src, size_t nwords) {
    active().xor_into(dst, src, nwords);
}
inline size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t nwords) {
    return active().and_popcount(a, b, nwords);
}
inline size_t or_popcount(const uint64_t* a, const uint64_t* b, size_t nwords) {
    return active().or_popcount(a, b, nwords);
}
inline size_t popcount(const uint64_t* a, size_t nwords) {
    return active().popcount(a, nwords);
}

}  // namespace symdec::kernels
