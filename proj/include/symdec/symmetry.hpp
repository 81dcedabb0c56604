#pragma once

#include <vector>

#include "symdec/code.hpp"
#include "symdec/noise.hpp"
#include "symdec/syndrome.hpp"

namespace symdec {

// One stabilizer in a symmetry: either a generator of the code or an explicit
// auxiliary operator such as the boundary stabilizer b.
struct StabRef {
    int generator_index = -1;
    PauliString aux;

    bool is_aux() const { return generator_index < 0; }
    static StabRef gen(size_t index) { return {static_cast<int>(index), PauliString()}; }
    static StabRef auxiliary(PauliString op) { return {-1, std::move(op)}; }
};

// A multiset of stabilizers whose product constraint yields a defect-parity
// conservation law. Materialised case: the product is the identity. System
// case: the product commutes with the generating set of a restricted error
// model.
struct Symmetry {
    std::vector<StabRef> members;         // multiset; repeats allowed
    std::vector<PauliString> restriction;  // error-model generators (system case)
    int boundary_member = -1;              // index into members designating b

    const PauliString& member_operator(const StabilizerCode& code, size_t i) const;
    PauliString product(const StabilizerCode& code) const;
    bool has_boundary() const { return boundary_member >= 0; }
};

// True iff the phase-free product over the multiset is the identity.
bool verify_materialised(const StabilizerCode& code, const Symmetry& sigma);

// True iff the member product commutes with every generator of the error
// model (sufficient for the +1-eigenvalue condition on all of it).
bool verify_system(const StabilizerCode& code, const Symmetry& sigma,
                   const std::vector<PauliString>& error_generators);

// Parity of defects over the multiset; a member counted twice contributes
// twice. Aux members are indexed past the code's generators (see
// syndrome_with_aux / events_with_aux).
int defect_parity(const Symmetry& sigma, const StabilizerCode& code,
                  const Syndrome& syndrome);
int total_event_parity(const DetectionEvents& events, const Symmetry& sigma,
                       const StabilizerCode& code);

// Syndrome extended with one entry per aux member of sigma (virtual index
// code.generators.size() + slot). Aux operators are inferred, not measured,
// so their outcomes come from the data error alone.
Syndrome syndrome_with_aux(const StabilizerCode& code, const Symmetry& sigma,
                           const PauliString& error);
DetectionEvents events_with_aux(const StabilizerCode& code, const Symmetry& sigma,
                                const ErrorSample& sample);

struct CleaningPolicy {
    bool same_type_only = true;  // restrict to generators of the logical's Pauli type
    int plateau_budget = -1;     // non-improving moves allowed; negative = n
};

struct CleaningResult {
    PauliString b;                     // cleaning stabilizer
    Symmetry sigma;                    // decomposition generators plus b
    PauliString far_logical;           // logical * b
    std::vector<size_t> decomposition;  // generator indices whose product is b
    double separation = 0;             // min lattice distance between supports
    bool found = true;                 // false: fell back to the trivial b = 1
    bool wrapped = false;              // cleaned all the way around a periodic code
};

// Moves the support of a logical operator by stabilizer multiplication,
// maximising the lattice separation between the old and new supports. On
// periodic codes where the full same-type generator product is the identity,
// the logical is cleaned all the way around onto itself (b = 1).
CleaningResult clean_logical(const StabilizerCode& code, const PauliString& logical,
                             const CleaningPolicy& policy = {});

// One symmetry per face diagonal of the periodic XZZX lattice; each is a
// system symmetry for the pure-dephasing error model.
std::vector<Symmetry> xzzx_row_symmetries(const StabilizerCode& code);

// Period-xi sublattice symmetries of the surface code matched to the
// ballistic string channel: one symmetry per face-column class and one per
// face-row class, each closed by its own boundary product. xi must be 1 or
// even; xi = 1 reduces to the full materialised symmetry.
std::vector<Symmetry> ballistic_symmetries(const StabilizerCode& code, int xi);

// Sigma = all Z-type (resp. X-type) generators plus the boundary operator
// b = prod S_f when that product is not the identity.
Symmetry css_sector_symmetry(const StabilizerCode& code, bool z_sector);

// Sigma over the full generator list, closed by its product when needed.
// The matchable symmetry of non-CSS codes such as the XZZX code.
Symmetry full_symmetry(const StabilizerCode& code);

}  // namespace symdec
