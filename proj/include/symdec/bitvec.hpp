#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symdec/kernels.hpp"

namespace symdec {

// Fixed-length bit vector packed 64 bits per word. The workhorse behind
// Pauli strings and GF(2) elimination; hot loops go through the kernel layer.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    size_t size() const { return nbits_; }
    size_t num_words() const { return words_.size(); }
    uint64_t* data() { return words_.data(); }
    const uint64_t* data() const { return words_.data(); }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void toggle(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void xor_with(const BitVec& other) {
        kernels::xor_into(words_.data(), other.words_.data(), words_.size());
    }

    size_t popcount() const { return kernels::popcount(words_.data(), words_.size()); }

    bool is_zero() const {
        for (uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    // Index of the lowest set bit, or size() if none.
    size_t lowest_set() const {
        for (size_t i = 0; i < words_.size(); i++) {
            if (words_[i] != 0) {
                return i * 64 + static_cast<size_t>(__builtin_ctzll(words_[i]));
            }
        }
        return nbits_;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    friend size_t and_popcount(const BitVec& a, const BitVec& b) {
        return kernels::and_popcount(a.words_.data(), b.words_.data(), a.words_.size());
    }
    friend size_t our_popcount(const BitVec& a, const BitVec& b) {
        return kernels::or_popcount(a.words_.data(), b.words_.data(), a.words_.size());
    }

  private:
    size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace symdec
