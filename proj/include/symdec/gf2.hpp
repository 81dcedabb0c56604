#pragma once

#include <vector>

#include "symdec/bitvec.hpp"
#include "symdec/pauli.hpp"

namespace symdec {

// Row-echelon basis over GF(2), built once from a generator list and then
// queried repeatedly (one membership test per Monte Carlo shot). Rows are the
// concatenated (x | z) symplectic vectors, bit-packed. Immutable after
// construction, so concurrent reads are safe.
class Gf2Basis {
  public:
    Gf2Basis() = default;
    explicit Gf2Basis(const std::vector<PauliString>& generators);

    size_t rank() const { return rows_.size(); }
    size_t num_columns() const { return ncols_; }

    // True iff p lies in the GF(2) span of the generators.
    bool contains(const PauliString& p) const;

    // Reduces v in place against the basis; returns true if it reduced to zero.
    bool reduce(BitVec& v) const;

  private:
    void insert(BitVec row);

    size_t ncols_ = 0;
    std::vector<BitVec> rows_;     // echelon rows, sorted by pivot
    std::vector<size_t> pivots_;   // pivot column per row
};

BitVec symplectic_vector(const PauliString& p);

size_t gf2_rank(const std::vector<PauliString>& generators);

bool in_group(const std::vector<PauliString>& generators, const PauliString& p);

}  // namespace symdec
