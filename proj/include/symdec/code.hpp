#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symdec/gf2.hpp"
#include "symdec/pauli.hpp"

namespace symdec {

enum class CodeFamily { surface, xzzx, toric, repetition, custom };

enum class BoundaryKind { x_type, z_type, periodic };

struct BoundarySegment {
    BoundaryKind kind = BoundaryKind::x_type;
    std::string name;  // "top", "bottom", "left", "right", "rows", "cols"
    std::vector<size_t> qubits;
};

// Per-generator lattice metadata. `row`/`col` is the face center; `diag` is
// the face-diagonal index used by the periodic XZZX row symmetries.
struct FaceMeta {
    double row = 0.0;
    double col = 0.0;
    bool light = false;     // light face <=> Z-type stabilizer (CSS families)
    bool boundary = false;  // weight-two boundary face
    int diag = 0;
};

struct Coord {
    double row = 0.0;
    double col = 0.0;
};

// Stabilizer code: generator list, canonical logical pairs, and the lattice
// geometry the symmetry constructions key off. Immutable after finalize();
// shareable across threads.
struct StabilizerCode {
    CodeFamily family = CodeFamily::custom;
    size_t n = 0;
    int lattice_size = 0;  // d (surface/xzzx/repetition) or L (toric)

    std::vector<PauliString> generators;
    std::vector<size_t> z_type;  // indices of pure-Z generators
    std::vector<size_t> x_type;  // indices of pure-X generators
    std::vector<std::pair<PauliString, PauliString>> logical_pairs;  // (X_j, Z_j)

    std::vector<Coord> qubit_coords;
    std::vector<FaceMeta> face_meta;  // aligned with generators
    std::vector<BoundarySegment> boundaries;
    bool periodic_rows = false;
    bool periodic_cols = false;

    size_t k() const { return logical_pairs.size(); }
    bool is_css() const { return z_type.size() + x_type.size() == generators.size(); }

    // Classifies generators, builds the cached echelon basis, and checks the
    // group-theoretic invariants (Abelian generators, valid logicals,
    // k = n - rank). Throws on violation.
    void finalize();

    const Gf2Basis& stabilizer_basis() const { return *basis_; }
    bool in_stabilizer_group(const PauliString& p) const { return basis_->contains(p); }

    // Manhattan distance between qubits, respecting periodic directions.
    double lattice_distance(size_t a, size_t b) const;

  private:
    std::shared_ptr<const Gf2Basis> basis_;
};

struct LogicalClass {
    bool in_normalizer = false;
    std::vector<Pauli> labels;  // one per logical qubit

    bool is_trivial() const {
        if (!in_normalizer) return false;
        for (Pauli p : labels) {
            if (p != Pauli::I) return false;
        }
        return true;
    }
};

// Coset label of p: per logical qubit, (anticommutes with Z_j?, anticommutes
// with X_j?) maps to I/X/Z/Y. Operators outside the normalizer report
// in_normalizer = false.
LogicalClass logical_class(const StabilizerCode& code, const PauliString& p);

}  // namespace symdec
