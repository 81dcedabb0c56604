#include <doctest.h>

#include "symdec/codes.hpp"
#include "symdec/gf2.hpp"
#include "symdec/rng.hpp"

using namespace symdec;

TEST_CASE("generator membership and closure") {
    StabilizerCode code = build_surface_code(3);
    CHECK(in_group(code.generators, code.generators[0]));

    PauliString all_z(code.n);
    for (size_t g : code.z_type) {
        all_z.multiply_inplace(code.generators[g]);
    }
    CHECK(in_group(code.generators, all_z));

    const PauliString& logical_z = code.logical_pairs[0].second;
    CHECK_FALSE(in_group(code.generators, logical_z));
}

TEST_CASE("span closure on random products") {
    StabilizerCode code = build_surface_code(5);
    Gf2Basis basis(code.generators);
    Rng rng(5);
    for (int trial = 0; trial < 500; trial++) {
        PauliString product(code.n);
        for (const PauliString& g : code.generators) {
            if (rng.next_double() < 0.5) {
                product.multiply_inplace(g);
            }
        }
        CHECK(basis.contains(product));
    }
}

TEST_CASE("rank matches n - k for the built-in codes") {
    CHECK(gf2_rank(build_surface_code(3).generators) == 8);
    CHECK(gf2_rank(build_surface_code(5).generators) == 24);
    CHECK(gf2_rank(build_toric_code(2).generators) == 6);
    CHECK(gf2_rank(build_xzzx_code(3).generators) == 8);
    CHECK(gf2_rank(build_repetition_code(5).generators) == 4);
}

TEST_CASE("empty and identity cases") {
    Gf2Basis empty_basis;
    CHECK(empty_basis.contains(PauliString(0)));
    StabilizerCode code = build_repetition_code(3);
    CHECK(in_group(code.generators, PauliString(3)));  // identity is in any group
}

TEST_CASE("bit-packed elimination scales to large n") {
    // A block-diagonal chain of Z pairs over 20000 qubits.
    size_t n = 20000;
    std::vector<PauliString> gens;
    for (size_t i = 0; i + 1 < n; i += 2) {
        PauliString g(n);
        g.set(i, Pauli::Z);
        g.set(i + 1, Pauli::Z);
        gens.push_back(std::move(g));
    }
    Gf2Basis basis(gens);
    CHECK(basis.rank() == gens.size());
    PauliString probe(n);
    probe.set(0, Pauli::Z);
    probe.set(1, Pauli::Z);
    probe.set(100, Pauli::Z);
    probe.set(101, Pauli::Z);
    CHECK(basis.contains(probe));
    probe.set(101, Pauli::I);
    CHECK_FALSE(basis.contains(probe));
}
