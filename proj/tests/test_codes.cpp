#include <doctest.h>

#include "symdec/codes.hpp"
#include "symdec/rng.hpp"

using namespace symdec;

TEST_CASE("surface code structure") {
    StabilizerCode code = build_surface_code(3);
    CHECK(code.n == 9);
    CHECK(code.z_type.size() == 4);
    CHECK(code.x_type.size() == 4);
    CHECK(code.k() == 1);
    CHECK(code.is_css());
    for (size_t g = 0; g < code.generators.size(); g++) {
        size_t w = code.generators[g].weight();
        CHECK(w == (code.face_meta[g].boundary ? 2 : 4));
    }

    StabilizerCode big = build_surface_code(5);
    CHECK(big.n == 25);
    CHECK(big.k() == 1);
    CHECK(big.z_type.size() == 12);
    CHECK(big.x_type.size() == 12);

    CHECK_THROWS(build_surface_code(4));
    CHECK_THROWS(build_surface_code(1));
}

TEST_CASE("surface code distance via exhaustive search") {
    CodeParameters p3 = code_parameters(build_surface_code(3), 3);
    CHECK(p3.n == 9);
    CHECK(p3.k == 1);
    CHECK(p3.exact);
    CHECK(p3.d == 3);

    // d=5: no pure-type logical of weight <= 4, and the stored weight-5
    // logical is a witness, so d = 5 exactly.
    StabilizerCode big = build_surface_code(5);
    CodeParameters p5 = code_parameters(big, 4);
    CHECK_FALSE(p5.exact);
    CHECK(big.logical_pairs[0].second.weight() == 5);
}

TEST_CASE("xzzx code structure") {
    StabilizerCode code = build_xzzx_code(3);
    CHECK(code.n == 9);
    CHECK(code.k() == 1);
    CHECK_FALSE(code.is_css());
    CHECK(code.periodic_rows);
    CHECK(code.periodic_cols);
    for (const PauliString& g : code.generators) {
        CHECK(g.weight() == 4);
        // Two X corners and two Z corners per face.
        CHECK(and_popcount(g.x_bits(), g.x_bits()) == 2);
    }
    CHECK_THROWS(build_xzzx_code(4));
}

TEST_CASE("xzzx is locally equivalent to a CSS surface code away from the seam") {
    // The sublattice Hadamard turns every face that does not cross the odd
    // periodic wrap into a pure-Z or pure-X plaquette; on the wrap seam the
    // checkerboard colouring cannot close, which is why the periodic XZZX
    // code is genuinely non-CSS.
    StabilizerCode xzzx = build_xzzx_code(5);
    std::vector<bool> mask = even_sublattice(xzzx);
    int d = xzzx.lattice_size;
    int bulk_faces = 0;
    for (size_t g = 0; g < xzzx.generators.size(); g++) {
        const FaceMeta& meta = xzzx.face_meta[g];
        if (meta.row > d - 1 || meta.col > d - 1) continue;  // wrap faces
        PauliString image = hadamard_on(xzzx.generators[g], mask);
        bool pure = image.x_bits().is_zero() || image.z_bits().is_zero();
        CHECK(pure);
        bulk_faces++;
    }
    CHECK(bulk_faces == (d - 1) * (d - 1));
}

TEST_CASE("xzzx distance via exhaustive search") {
    CodeParameters p3 = code_parameters(build_xzzx_code(3), 3, DistanceSearch::all_paulis);
    CHECK(p3.exact);
    CHECK(p3.d == 3);

    StabilizerCode big = build_xzzx_code(5);
    CodeParameters p5 = code_parameters(big, 4, DistanceSearch::all_paulis);
    CHECK_FALSE(p5.exact);  // no logical of weight <= 4
    CHECK(big.logical_pairs[0].second.weight() == 5);
}

TEST_CASE("toric code structure") {
    StabilizerCode code = build_toric_code(2);
    CHECK(code.n == 8);
    CHECK(code.k() == 2);
    CHECK(code.is_css());
    for (const PauliString& g : code.generators) {
        CHECK(g.weight() == 4);
    }
    // The full product of Z-type generators is the identity.
    PauliString all_z(code.n);
    for (size_t g : code.z_type) all_z.multiply_inplace(code.generators[g]);
    CHECK(all_z.is_identity());

    CodeParameters p2 = code_parameters(code, 2);
    CHECK(p2.exact);
    CHECK(p2.d == 2);

    StabilizerCode l3 = build_toric_code(3);
    CHECK(l3.n == 18);
    CHECK(l3.k() == 2);
    CodeParameters p3 = code_parameters(l3, 2);
    CHECK_FALSE(p3.exact);  // no logical of weight <= 2
    CHECK(l3.logical_pairs[0].second.weight() == 3);

    CHECK_THROWS(build_toric_code(1));
}

TEST_CASE("repetition code structure") {
    StabilizerCode code = build_repetition_code(3);
    CHECK(code.generators.size() == 2);
    CHECK(code.k() == 1);

    StabilizerCode d2 = build_repetition_code(2);
    CHECK(d2.generators.size() == 1);
    CHECK(d2.generators[0] == PauliString::parse("Z0 Z1", 2));

    CodeParameters px = code_parameters(build_repetition_code(5), 5, DistanceSearch::pure_x);
    CHECK(px.n == 5);
    CHECK(px.k == 1);
    CHECK(px.exact);
    CHECK(px.d == 5);  // bit-flip distance
    CodeParameters pz = code_parameters(build_repetition_code(5), 5, DistanceSearch::pure_z);
    CHECK(pz.d == 1);  // Z0 is itself a logical

    CHECK_THROWS(build_repetition_code(1));
}

TEST_CASE("logical class labels the canonical representatives") {
    for (const StabilizerCode& code :
         {build_surface_code(3), build_toric_code(2), build_xzzx_code(3),
          build_repetition_code(4)}) {
        CHECK(logical_class(code, PauliString(code.n)).is_trivial());
        for (size_t j = 0; j < code.k(); j++) {
            LogicalClass cx = logical_class(code, code.logical_pairs[j].first);
            REQUIRE(cx.in_normalizer);
            for (size_t m = 0; m < code.k(); m++) {
                CHECK(cx.labels[m] == (m == j ? Pauli::X : Pauli::I));
            }
            LogicalClass cz = logical_class(code, code.logical_pairs[j].second);
            REQUIRE(cz.in_normalizer);
            for (size_t m = 0; m < code.k(); m++) {
                CHECK(cz.labels[m] == (m == j ? Pauli::Z : Pauli::I));
            }
        }
    }
}

TEST_CASE("logical class is invariant under stabilizer multiplication") {
    StabilizerCode code = build_surface_code(3);
    Rng rng(77);
    const PauliString& lx = code.logical_pairs[0].first;
    for (int trial = 0; trial < 200; trial++) {
        PauliString p = lx;
        for (const PauliString& g : code.generators) {
            if (rng.next_double() < 0.5) p.multiply_inplace(g);
        }
        LogicalClass cls = logical_class(code, p);
        REQUIRE(cls.in_normalizer);
        CHECK(cls.labels[0] == Pauli::X);
    }
    // Anything anticommuting with a generator is outside the normalizer.
    PauliString bad = PauliString::single(code.n, 4, Pauli::X);
    bad.multiply_inplace(PauliString::single(code.n, 5, Pauli::Z));
    LogicalClass cls = logical_class(code, bad);
    CHECK_FALSE(cls.in_normalizer);
}

TEST_CASE("constructors validate their invariants at larger sizes") {
    for (int d : {5, 7, 9}) {
        CHECK_NOTHROW(build_surface_code(d));
    }
    for (int d : {5, 7}) {
        CHECK_NOTHROW(build_xzzx_code(d));
    }
    for (int L : {3, 4}) {
        CHECK_NOTHROW(build_toric_code(L));
    }
}
