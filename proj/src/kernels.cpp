#include "symdec/kernels.hpp"

#include <atomic>

namespace symdec::kernels {

namespace {

void xor_into_scalar(uint64_t* dst, const uint64_t* src, size_t nwords) {
    for (size_t i = 0; i < nwords; i++) {
        dst[i] ^= src[i];
    }
}

size_t and_popcount_scalar(const uint64_t* a, const uint64_t* b, size_t nwords) {
    size_t total = 0;
    for (size_t i = 0; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i] & b[i]));
    }
    return total;
}

size_t or_popcount_scalar(const uint64_t* a, const uint64_t* b, size_t nwords) {
    size_t total = 0;
    for (size_t i = 0; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i] | b[i]));
    }
    return total;
}

size_t popcount_scalar(const uint64_t* a, size_t nwords) {
    size_t total = 0;
    for (size_t i = 0; i < nwords; i++) {
        total += static_cast<size_t>(__builtin_popcountll(a[i]));
    }
    return total;
}

const Ops* pick_backend() {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) {
        return &avx2_ops;
    }
#endif
#if defined(__aarch64__)
    return &neon_ops;
#endif
    return &scalar_ops;
}

std::atomic<const Ops*> forced{nullptr};

}  // namespace

const Ops scalar_ops{xor_into_scalar, and_popcount_scalar, or_popcount_scalar,
                     popcount_scalar, "scalar"};

const Ops& scalar() { return scalar_ops; }

const Ops& active() {
    const Ops* f = forced.load(std::memory_order_relaxed);
    if (f != nullptr) {
        return *f;
    }
    static const Ops* selected = pick_backend();
    return *selected;
}

void force_backend(const Ops* ops) { forced.store(ops, std::memory_order_relaxed); }

}  // namespace symdec::kernels
