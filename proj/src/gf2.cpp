#include "symdec/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdec {

BitVec symplectic_vector(const PauliString& p) {
    size_t n = p.num_qubits();
    BitVec v(2 * n);
    const BitVec& x = p.x_bits();
    const BitVec& z = p.z_bits();
    for (size_t i = 0; i < n; i++) {
        if (x.get(i)) v.set(i, true);
        if (z.get(i)) v.set(n + i, true);
    }
    return v;
}

Gf2Basis::Gf2Basis(const std::vector<PauliString>& generators) {
    if (generators.empty()) {
        return;
    }
    size_t n = generators[0].num_qubits();
    ncols_ = 2 * n;
    for (const PauliString& g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("generator qubit counts differ");
        }
        insert(symplectic_vector(g));
    }
}

void Gf2Basis::insert(BitVec row) {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (row.get(pivots_[i])) {
            row.xor_with(rows_[i]);
        }
    }
    size_t pivot = row.lowest_set();
    if (pivot >= ncols_) {
        return;  // dependent row
    }
    // Back-substitute to keep the basis reduced.
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].get(pivot)) {
            rows_[i].xor_with(row);
        }
    }
    size_t where = 0;
    while (where < pivots_.size() && pivots_[where] < pivot) {
        where++;
    }
    rows_.insert(rows_.begin() + static_cast<ptrdiff_t>(where), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<ptrdiff_t>(where), pivot);
}

bool Gf2Basis::reduce(BitVec& v) const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v.xor_with(rows_[i]);
        }
    }
    return v.is_zero();
}

bool Gf2Basis::contains(const PauliString& p) const {
    if (ncols_ == 0) {
        return p.is_identity();
    }
    if (2 * p.num_qubits() != ncols_) {
        throw std::invalid_argument("operator qubit count does not match basis");
    }
    BitVec v = symplectic_vector(p);
    return reduce(v);
}

size_t gf2_rank(const std::vector<PauliString>& generators) {
    return Gf2Basis(generators).rank();
}

bool in_group(const std::vector<PauliString>& generators, const PauliString& p) {
    return Gf2Basis(generators).contains(p);
}

}  // namespace symdec
