#include "symdec/code.hpp"

#include <cmath>
#include <stdexcept>

namespace symdec {

namespace {

bool pure_z(const PauliString& p) { return p.x_bits().is_zero(); }
bool pure_x(const PauliString& p) { return p.z_bits().is_zero(); }

}  // namespace

void StabilizerCode::finalize() {
    z_type.clear();
    x_type.clear();
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].num_qubits() != n) {
            throw std::invalid_argument("generator qubit count mismatch");
        }
        if (pure_z(generators[i])) {
            z_type.push_back(i);
        } else if (pure_x(generators[i])) {
            x_type.push_back(i);
        }
    }

    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!commutes(generators[i], generators[j])) {
                throw std::logic_error("generators do not form an Abelian group");
            }
        }
    }

    basis_ = std::make_shared<Gf2Basis>(generators);
    if (n - basis_->rank() != logical_pairs.size()) {
        throw std::logic_error("k does not match n - rank(generators)");
    }

    for (size_t j = 0; j < logical_pairs.size(); j++) {
        const auto& [lx, lz] = logical_pairs[j];
        for (const PauliString& g : generators) {
            if (!commutes(lx, g) || !commutes(lz, g)) {
                throw std::logic_error("logical operator anticommutes with a generator");
            }
        }
        if (basis_->contains(lx) || basis_->contains(lz)) {
            throw std::logic_error("logical operator lies in the stabilizer group");
        }
        if (commutes(lx, lz)) {
            throw std::logic_error("logical pair does not anticommute");
        }
        for (size_t m = 0; m < logical_pairs.size(); m++) {
            if (m == j) continue;
            if (!commutes(lx, logical_pairs[m].first) || !commutes(lx, logical_pairs[m].second) ||
                !commutes(lz, logical_pairs[m].first) || !commutes(lz, logical_pairs[m].second)) {
                throw std::logic_error("distinct logical pairs do not commute");
            }
        }
    }

    if (qubit_coords.size() != n) {
        throw std::invalid_argument("qubit_coords size mismatch");
    }
    if (!face_meta.empty() && face_meta.size() != generators.size()) {
        throw std::invalid_argument("face_meta size mismatch");
    }
}

double StabilizerCode::lattice_distance(size_t a, size_t b) const {
    double dr = std::abs(qubit_coords[a].row - qubit_coords[b].row);
    double dc = std::abs(qubit_coords[a].col - qubit_coords[b].col);
    if (periodic_rows && lattice_size > 0) {
        dr = std::min(dr, static_cast<double>(lattice_size) - dr);
    }
    if (periodic_cols && lattice_size > 0) {
        dc = std::min(dc, static_cast<double>(lattice_size) - dc);
    }
    return dr + dc;
}

LogicalClass logical_class(const StabilizerCode& code, const PauliString& p) {
    if (p.num_qubits() != code.n) {
        throw std::invalid_argument("operator qubit count does not match code");
    }
    LogicalClass out;
    for (const PauliString& g : code.generators) {
        if (!commutes(p, g)) {
            return out;  // not in the normalizer
        }
    }
    out.in_normalizer = true;
    out.labels.reserve(code.k());
    for (const auto& [lx, lz] : code.logical_pairs) {
        bool anti_z = anticommutes(p, lz);
        bool anti_x = anticommutes(p, lx);
        Pauli label = Pauli::I;
        if (anti_z && !anti_x) label = Pauli::X;
        if (!anti_z && anti_x) label = Pauli::Z;
        if (anti_z && anti_x) label = Pauli::Y;
        out.labels.push_back(label);
    }
    return out;
}

}  // namespace symdec
