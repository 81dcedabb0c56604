#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symdec/bitvec.hpp"

namespace symdec {

// Single-qubit Pauli label. Encoded so that multiplication modulo phase is a
// plain XOR of the (x, z) bit pair: I=00, X=10, Z=01, Y=11.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

// Phase-free n-qubit Pauli operator stored as a pair of bit masks (the
// symplectic representation). Identity entries are implicit, so equality of
// the masks is equality of the operator.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(size_t n) : n_(n), x_(n), z_(n) {}

    static PauliString single(size_t n, size_t qubit, Pauli p);
    static PauliString from_support(size_t n,
                                    const std::vector<std::pair<size_t, Pauli>>& support);
    // Parses the textual literal format, e.g. "X0 Z4 Y7". "I" or an empty
    // string denotes the identity. Duplicate qubits are rejected.
    static PauliString parse(const std::string& literal, size_t n);

    size_t num_qubits() const { return n_; }

    Pauli at(size_t qubit) const {
        return static_cast<Pauli>((x_.get(qubit) ? 1 : 0) | (z_.get(qubit) ? 2 : 0));
    }
    void set(size_t qubit, Pauli p) {
        uint8_t v = static_cast<uint8_t>(p);
        x_.set(qubit, v & 1);
        z_.set(qubit, v & 2);
    }

    const BitVec& x_bits() const { return x_; }
    const BitVec& z_bits() const { return z_; }
    BitVec& x_bits() { return x_; }
    BitVec& z_bits() { return z_; }

    size_t weight() const { return our_popcount(x_, z_); }
    bool is_identity() const { return x_.is_zero() && z_.is_zero(); }

    // Non-identity entries in qubit order.
    std::vector<std::pair<size_t, Pauli>> support() const;

    // In-place phase-free product.
    void multiply_inplace(const PauliString& other) {
        check_same_n(other);
        x_.xor_with(other.x_);
        z_.xor_with(other.z_);
    }

    std::string to_literal() const;

    friend bool operator==(const PauliString& a, const PauliString& b) {
        return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
    }
    friend bool operator!=(const PauliString& a, const PauliString& b) { return !(a == b); }

    void check_same_n(const PauliString& other) const {
        if (n_ != other.n_) {
            throw std::invalid_argument("Pauli operators act on different qubit counts");
        }
    }

  private:
    size_t n_ = 0;
    BitVec x_;
    BitVec z_;
};

// Symplectic inner product is zero, i.e. the operators commute.
bool commutes(const PauliString& a, const PauliString& b);
inline bool anticommutes(const PauliString& a, const PauliString& b) {
    return !commutes(a, b);
}

PauliString multiply(const PauliString& a, const PauliString& b);

inline size_t weight(const PauliString& p) { return p.weight(); }

}  // namespace symdec
