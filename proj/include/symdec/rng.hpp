#pragma once

#include <cstdint>

namespace symdec {

// Deterministic, platform-independent RNG (xoshiro256++ seeded via SplitMix64).
// The standard-library distributions are implementation-defined, so all
// sampling goes through this engine and the fixed 53-bit double mapping below;
// identical seeds give identical samples everywhere.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) {
            word = splitmix64(sm);
        }
    }

    uint64_t next_u64() {
        uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    static uint64_t splitmix64(uint64_t& state) {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Counter-based stream derivation: mixing is stateless, so any worker can
    // reconstruct the stream for (master, index) without coordination.
    static uint64_t derive(uint64_t master, uint64_t index) {
        uint64_t s = master ^ (0x9E3779B97F4A7C15ull * (index + 1));
        return splitmix64(s);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

}  // namespace symdec
