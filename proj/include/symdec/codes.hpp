#pragma once

#include <optional>

#include "symdec/code.hpp"

namespace symdec {

// Rotated planar surface code on a d x d qubit grid (d odd). Z-type
// weight-two stabilizers sit on the left/right boundaries, X-type on
// top/bottom. The logical Z is a horizontal weight-d string (row 0), the
// logical X a vertical one (column 0).
StabilizerCode build_surface_code(int d);

// XZZX code on a d x d grid with periodic boundaries (d odd). Every face
// carries the same stabilizer: X on the north-west/south-east corners, Z on
// the other diagonal. Under pure dephasing it splits into d disjoint cyclic
// repetition codes, one per lattice diagonal; a Hadamard on the even
// checkerboard sublattice maps it onto a CSS surface code on the same lattice.
StabilizerCode build_xzzx_code(int d);

// Toric code in the edge-qubit layout: n = 2L^2 qubits on the edges of an
// L x L torus, weight-four plaquette (Z) and star (X) generators, k = 2.
StabilizerCode build_toric_code(int L);

// Distance-d repetition code: Z_i Z_{i+1} generators, logical Z = Z_0,
// logical X = X on every qubit.
StabilizerCode build_repetition_code(int d);

enum class DistanceSearch { automatic, css_pure, pure_x, pure_z, all_paulis };

struct CodeParameters {
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;     // meaningful only when exact
    bool exact = false;  // false: no logical of weight <= max_search_weight
};

// n and k are exact (GF(2) rank); d by exhaustive search over candidate
// operators of weight <= max_search_weight. `css_pure` restricts candidates
// to pure-X and pure-Z strings (valid for CSS codes); `automatic` picks
// css_pure for CSS codes and all_paulis otherwise.
CodeParameters code_parameters(const StabilizerCode& code, size_t max_search_weight,
                               DistanceSearch search = DistanceSearch::automatic);

// Swaps the X and Z components on the selected qubits (per-qubit Hadamard).
PauliString hadamard_on(const PauliString& p, const std::vector<bool>& selected);

// Qubit selector for the even checkerboard sublattice of a grid code. On the
// periodic XZZX lattice the colouring is only consistent away from the odd
// wrap seam, which is where the local equivalence to a CSS surface code
// lives.
std::vector<bool> even_sublattice(const StabilizerCode& code);

}  // namespace symdec
