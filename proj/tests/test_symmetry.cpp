#include <doctest.h>

#include "symdec/codes.hpp"
#include "symdec/harness.hpp"
#include "symdec/rng.hpp"
#include "symdec/symmetry.hpp"

using namespace symdec;

namespace {

Symmetry z_generators_only(const StabilizerCode& code) {
    Symmetry sigma;
    for (size_t g : code.z_type) sigma.members.push_back(StabRef::gen(g));
    return sigma;
}

}  // namespace

TEST_CASE("materialised symmetry verification") {
    StabilizerCode surface = build_surface_code(3);

    // All Z generators alone multiply to the boundary operator, not identity.
    Symmetry bare = z_generators_only(surface);
    CHECK_FALSE(verify_materialised(surface, bare));

    // Adding b closes the product.
    Symmetry closed = css_sector_symmetry(surface, true);
    REQUIRE(closed.has_boundary());
    CHECK(verify_materialised(surface, closed));

    // On the torus the Z generators already multiply to the identity.
    StabilizerCode toric = build_toric_code(3);
    Symmetry toric_z = z_generators_only(toric);
    CHECK(verify_materialised(toric, toric_z));
    CHECK_FALSE(css_sector_symmetry(toric, true).has_boundary());
}

TEST_CASE("boundary operator of the surface code spans both X boundaries") {
    StabilizerCode code = build_surface_code(3);
    Symmetry sigma = css_sector_symmetry(code, true);
    const PauliString& b = sigma.members[static_cast<size_t>(sigma.boundary_member)].aux;
    // Z on the full top and bottom rows.
    CHECK(b == PauliString::parse("Z0 Z1 Z2 Z6 Z7 Z8", code.n));
    CHECK(code.in_stabilizer_group(b));
}

TEST_CASE("system symmetry verification on the XZZX code") {
    StabilizerCode code = build_xzzx_code(5);
    std::vector<PauliString> all_z, all_x;
    for (size_t q = 0; q < code.n; q++) {
        all_z.push_back(PauliString::single(code.n, q, Pauli::Z));
        all_x.push_back(PauliString::single(code.n, q, Pauli::X));
    }
    std::vector<Symmetry> rows = xzzx_row_symmetries(code);
    REQUIRE(rows.size() == 5);
    for (const Symmetry& row : rows) {
        CHECK(verify_system(code, row, all_z));
        CHECK_FALSE(verify_system(code, row, all_x));
        CHECK_FALSE(verify_materialised(code, row));
    }
    // A materialised symmetry trivially satisfies the system condition.
    StabilizerCode toric = build_toric_code(2);
    Symmetry toric_z = css_sector_symmetry(toric, true);
    std::vector<PauliString> any_errors{PauliString::parse("X0 Y3", toric.n)};
    CHECK(verify_system(toric, toric_z, any_errors));
}

TEST_CASE("xzzx row symmetry parities") {
    StabilizerCode code = build_xzzx_code(3);
    std::vector<Symmetry> rows = xzzx_row_symmetries(code);
    REQUIRE(rows.size() == 3);

    for (size_t q = 0; q < code.n; q++) {
        Syndrome syn = extract_syndrome(code, PauliString::single(code.n, q, Pauli::Z));
        for (const Symmetry& row : rows) {
            CHECK(defect_parity(row, code, syn) == 0);
        }
        Syndrome syn_x = extract_syndrome(code, PauliString::single(code.n, q, Pauli::X));
        int odd_rows = 0;
        for (const Symmetry& row : rows) {
            odd_rows += defect_parity(row, code, syn_x);
        }
        CHECK(odd_rows >= 1);
    }
}

TEST_CASE("defect parity with the boundary member") {
    StabilizerCode code = build_surface_code(3);
    CHECK(defect_parity(css_sector_symmetry(code, true), code, Syndrome{}) == 0);

    // A bulk error flips two faces: even parity with or without b.
    PauliString bulk = PauliString::single(code.n, 4, Pauli::X);
    Symmetry bare = z_generators_only(code);
    Symmetry closed = css_sector_symmetry(code, true);
    CHECK(defect_parity(bare, code, extract_syndrome(code, bulk)) == 0);
    CHECK(defect_parity(closed, code, syndrome_with_aux(code, closed, bulk)) == 0);

    // An error at the X boundary flips one face; b restores even parity.
    PauliString edge = PauliString::single(code.n, 1, Pauli::X);
    CHECK(defect_parity(bare, code, extract_syndrome(code, edge)) == 1);
    CHECK(defect_parity(closed, code, syndrome_with_aux(code, closed, edge)) == 0);
}

TEST_CASE("a member counted twice contributes twice") {
    StabilizerCode code = build_surface_code(3);
    PauliString edge = PauliString::single(code.n, 1, Pauli::X);
    Syndrome syn = extract_syndrome(code, edge);
    REQUIRE(syn.defects.size() == 1);
    size_t hot = syn.defects[0];
    Symmetry doubled;
    doubled.members.push_back(StabRef::gen(hot));
    doubled.members.push_back(StabRef::gen(hot));
    CHECK(defect_parity(doubled, code, syn) == 0);
    CHECK(verify_materialised(code, doubled));  // S * S = 1
}

TEST_CASE("conservation law holds across sampled noise") {
    StabilizerCode code = build_surface_code(5);
    NoiseModel channel = NoiseModel::bitflip(0.15);
    std::vector<Symmetry> symmetries = audit_symmetries(code, channel);
    Rng rng(404);
    for (int shot = 0; shot < 2000; shot++) {
        PauliString error = sample_iid(channel.pauli_channel(), code.n, rng);
        for (const Symmetry& sigma : symmetries) {
            CHECK(defect_parity(sigma, code, syndrome_with_aux(code, sigma, error)) == 0);
        }
    }
}

TEST_CASE("cleaning the surface code logical to the far boundary") {
    for (int d : {3, 5}) {
        StabilizerCode code = build_surface_code(d);
        const PauliString& logical_z = code.logical_pairs[0].second;
        CleaningResult result = clean_logical(code, logical_z);
        REQUIRE(result.found);
        CHECK_FALSE(result.wrapped);

        // b is exactly the product of all Z-type generators.
        PauliString all_z(code.n);
        for (size_t g : code.z_type) all_z.multiply_inplace(code.generators[g]);
        CHECK(result.b == all_z);
        CHECK(code.in_stabilizer_group(result.b));
        CHECK(multiply(logical_z, result.far_logical) == result.b);
        CHECK(verify_materialised(code, result.sigma));
        CHECK(result.separation == doctest::Approx(d - 1));

        // The far logical sits on the bottom boundary row.
        for (const auto& [q, p] : result.far_logical.support()) {
            CHECK(p == Pauli::Z);
            CHECK(code.qubit_coords[q].row == doctest::Approx(d - 1));
        }
        // Cleaning preserves the logical action.
        LogicalClass cls = logical_class(code, result.far_logical);
        REQUIRE(cls.in_normalizer);
        CHECK(cls.labels[0] == Pauli::Z);
    }
}

TEST_CASE("cleaning the toric logical wraps onto itself") {
    StabilizerCode code = build_toric_code(3);
    const PauliString& logical_z = code.logical_pairs[0].second;
    CleaningResult result = clean_logical(code, logical_z);
    REQUIRE(result.found);
    CHECK(result.wrapped);
    CHECK(result.b.is_identity());
    CHECK(result.far_logical == logical_z);
    CHECK(result.decomposition.size() == code.z_type.size());
    CHECK(verify_materialised(code, result.sigma));
}

TEST_CASE("cleaning the repetition code logical") {
    StabilizerCode code = build_repetition_code(3);
    CleaningResult result = clean_logical(code, code.logical_pairs[0].second);
    REQUIRE(result.found);
    CHECK(result.b == PauliString::parse("Z0 Z2", code.n));
    CHECK(result.far_logical == PauliString::parse("Z2", code.n));
    CHECK(result.separation == doctest::Approx(2));
}

TEST_CASE("cleaning falls back to the trivial result when nothing improves") {
    // The all-X repetition logical touches every qubit, so no candidate can
    // separate from it.
    StabilizerCode code = build_repetition_code(4);
    CleaningResult result = clean_logical(code, code.logical_pairs[0].first);
    CHECK_FALSE(result.found);
    CHECK(result.b.is_identity());
    CHECK(result.far_logical == code.logical_pairs[0].first);
    CHECK(verify_materialised(code, result.sigma));  // empty product
}

TEST_CASE("cleaning rejects non-logical inputs") {
    StabilizerCode code = build_surface_code(3);
    CHECK_THROWS(clean_logical(code, code.generators[0]));                      // stabilizer
    CHECK_THROWS(clean_logical(code, PauliString::single(code.n, 4, Pauli::X)));  // detectable
}

TEST_CASE("ballistic symmetries at xi = 2") {
    StabilizerCode code = build_surface_code(5);
    std::vector<Symmetry> symmetries = ballistic_symmetries(code, 2);
    CHECK(symmetries.size() == 4);  // xi column classes + xi row classes

    NoiseModel model = NoiseModel::ballistic(0.01, 2);
    std::vector<PauliString> strings = ballistic_string_set(model, code);
    for (const Symmetry& sigma : symmetries) {
        CHECK(verify_materialised(code, sigma));  // class plus its own product
        CHECK(verify_system(code, sigma, strings));
        for (const PauliString& s : strings) {
            CHECK(defect_parity(sigma, code, syndrome_with_aux(code, sigma, s)) == 0);
        }
    }

    // xi = 1 reduces to the full materialised sector symmetry.
    std::vector<Symmetry> unit = ballistic_symmetries(code, 1);
    REQUIRE(unit.size() == 1);
    CHECK(verify_materialised(code, unit[0]));
    size_t gen_members = 0;
    for (const StabRef& m : unit[0].members) gen_members += m.is_aux() ? 0 : 1;
    CHECK(gen_members == code.z_type.size());

    CHECK_THROWS(ballistic_symmetries(code, 3));  // odd xi > 1 unsupported
}
