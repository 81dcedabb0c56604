#include "symdec/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace symdec {

const PauliString& Symmetry::member_operator(const StabilizerCode& code, size_t i) const {
    const StabRef& m = members.at(i);
    if (m.is_aux()) {
        return m.aux;
    }
    return code.generators.at(static_cast<size_t>(m.generator_index));
}

PauliString Symmetry::product(const StabilizerCode& code) const {
    PauliString out(code.n);
    for (size_t i = 0; i < members.size(); i++) {
        out.multiply_inplace(member_operator(code, i));
    }
    return out;
}

bool verify_materialised(const StabilizerCode& code, const Symmetry& sigma) {
    return sigma.product(code).is_identity();
}

bool verify_system(const StabilizerCode& code, const Symmetry& sigma,
                   const std::vector<PauliString>& error_generators) {
    PauliString prod = sigma.product(code);
    for (const PauliString& e : error_generators) {
        if (!commutes(prod, e)) {
            return false;
        }
    }
    return true;
}

namespace {

// Maps each member to the index space used by Syndrome/DetectionEvents:
// generator indices as-is, aux members just past them.
std::vector<size_t> member_indices(const Symmetry& sigma, const StabilizerCode& code) {
    std::vector<size_t> out;
    size_t aux_slot = 0;
    for (const StabRef& m : sigma.members) {
        if (m.is_aux()) {
            out.push_back(code.generators.size() + aux_slot);
            aux_slot++;
        } else {
            out.push_back(static_cast<size_t>(m.generator_index));
        }
    }
    return out;
}

}  // namespace

int defect_parity(const Symmetry& sigma, const StabilizerCode& code,
                  const Syndrome& syndrome) {
    int parity = 0;
    for (size_t idx : member_indices(sigma, code)) {
        if (syndrome.has(idx)) {
            parity ^= 1;
        }
    }
    return parity;
}

int total_event_parity(const DetectionEvents& events, const Symmetry& sigma,
                       const StabilizerCode& code) {
    std::vector<size_t> indices = member_indices(sigma, code);
    int parity = 0;
    for (const auto& [g, t] : events.events) {
        (void)t;
        for (size_t idx : indices) {
            if (idx == g) {
                parity ^= 1;
            }
        }
    }
    return parity;
}

Syndrome syndrome_with_aux(const StabilizerCode& code, const Symmetry& sigma,
                           const PauliString& error) {
    Syndrome out = extract_syndrome(code, error);
    size_t aux_slot = 0;
    for (const StabRef& m : sigma.members) {
        if (!m.is_aux()) continue;
        if (anticommutes(error, m.aux)) {
            out.defects.push_back(code.generators.size() + aux_slot);
        }
        aux_slot++;
    }
    std::sort(out.defects.begin(), out.defects.end());
    return out;
}

DetectionEvents events_with_aux(const StabilizerCode& code, const Symmetry& sigma,
                                const ErrorSample& sample) {
    DetectionEvents out = detection_events(code, sample);
    size_t aux_slot = 0;
    for (const StabRef& m : sigma.members) {
        if (!m.is_aux()) {
            continue;
        }
        bool previous = false;
        for (int t = 0; t < sample.rounds(); t++) {
            bool raw = anticommutes(sample.cumulative[static_cast<size_t>(t)], m.aux);
            if (raw != previous) {
                out.events.emplace_back(code.generators.size() + aux_slot, t);
            }
            previous = raw;
        }
        aux_slot++;
    }
    std::sort(out.events.begin(), out.events.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second : a.first < b.first;
              });
    return out;
}

namespace {

using Objective = std::tuple<double, long, long>;  // (separation, -shell, -weight)

Objective cleaning_objective(const StabilizerCode& code,
                             const std::vector<size_t>& target_support,
                             const PauliString& candidate) {
    double min_dist = std::numeric_limits<double>::infinity();
    long shell = 0;
    long weight = 0;
    for (const auto& [q, p] : candidate.support()) {
        (void)p;
        weight++;
        double dq = std::numeric_limits<double>::infinity();
        for (size_t t : target_support) {
            dq = std::min(dq, code.lattice_distance(q, t));
        }
        if (dq < min_dist - 1e-9) {
            min_dist = dq;
            shell = 1;
        } else if (dq < min_dist + 1e-9) {
            shell++;
        }
    }
    if (weight == 0) {
        return {0.0, 0, 0};
    }
    return {min_dist, -shell, -weight};
}

std::vector<uint64_t> pauli_key(const PauliString& p) {
    std::vector<uint64_t> key;
    key.insert(key.end(), p.x_bits().data(), p.x_bits().data() + p.x_bits().num_words());
    key.insert(key.end(), p.z_bits().data(), p.z_bits().data() + p.z_bits().num_words());
    return key;
}

}  // namespace

CleaningResult clean_logical(const StabilizerCode& code, const PauliString& logical,
                             const CleaningPolicy& policy) {
    for (const PauliString& g : code.generators) {
        if (!commutes(logical, g)) {
            throw std::invalid_argument("operator is not in the normalizer");
        }
    }
    if (code.in_stabilizer_group(logical)) {
        throw std::invalid_argument("operator is a stabilizer, not a logical");
    }

    std::vector<size_t> candidates;
    bool logical_pure_z = logical.x_bits().is_zero();
    bool logical_pure_x = logical.z_bits().is_zero();
    if (policy.same_type_only && logical_pure_z && !code.z_type.empty()) {
        candidates = code.z_type;
    } else if (policy.same_type_only && logical_pure_x && !code.x_type.empty()) {
        candidates = code.x_type;
    } else {
        candidates.resize(code.generators.size());
        for (size_t i = 0; i < candidates.size(); i++) candidates[i] = i;
    }

    // Periodic closure: when the candidate product is the identity, the
    // logical cleans all the way around onto itself.
    PauliString full_product(code.n);
    for (size_t g : candidates) {
        full_product.multiply_inplace(code.generators[g]);
    }
    if (!candidates.empty() && full_product.is_identity()) {
        CleaningResult result;
        result.b = PauliString(code.n);
        result.far_logical = logical;
        result.decomposition = candidates;
        for (size_t g : candidates) {
            result.sigma.members.push_back(StabRef::gen(g));
        }
        result.separation = 0;
        result.found = true;
        result.wrapped = true;
        return result;
    }

    std::vector<size_t> target_support;
    for (const auto& [q, p] : logical.support()) {
        (void)p;
        target_support.push_back(q);
    }

    long budget = policy.plateau_budget < 0 ? static_cast<long>(code.n)
                                            : policy.plateau_budget;
    PauliString current = logical;
    Objective current_obj = cleaning_objective(code, target_support, current);
    std::vector<size_t> decomposition;
    PauliString best = current;
    Objective best_obj = current_obj;
    std::vector<size_t> best_decomposition;
    std::set<std::vector<uint64_t>> visited;
    visited.insert(pauli_key(current));
    long plateau_used = 0;
    size_t max_steps = 2 * candidates.size() + static_cast<size_t>(budget) + 4;

    for (size_t step = 0; step < max_steps; step++) {
        bool moved = false;
        size_t best_gen = 0;
        PauliString best_move;
        Objective best_move_obj;
        for (size_t g : candidates) {
            PauliString next = multiply(current, code.generators[g]);
            if (visited.count(pauli_key(next))) continue;
            Objective obj = cleaning_objective(code, target_support, next);
            if (!moved || obj > best_move_obj) {
                moved = true;
                best_gen = g;
                best_move = next;
                best_move_obj = obj;
            }
        }
        if (!moved) break;
        if (best_move_obj > current_obj) {
            plateau_used = 0;
        } else {
            if (plateau_used >= budget) break;
            plateau_used++;
        }
        current = std::move(best_move);
        current_obj = best_move_obj;
        decomposition.push_back(best_gen);
        visited.insert(pauli_key(current));
        if (current_obj > best_obj) {
            best = current;
            best_obj = current_obj;
            best_decomposition = decomposition;
        }
    }

    CleaningResult result;
    if (std::get<0>(best_obj) <= 0) {
        result.b = PauliString(code.n);
        result.far_logical = logical;
        result.found = false;
        return result;
    }
    result.far_logical = best;
    result.decomposition = best_decomposition;
    PauliString b(code.n);
    for (size_t g : best_decomposition) {
        b.multiply_inplace(code.generators[g]);
        result.sigma.members.push_back(StabRef::gen(g));
    }
    result.b = b;
    result.sigma.members.push_back(StabRef::auxiliary(b));
    result.sigma.boundary_member = static_cast<int>(result.sigma.members.size()) - 1;
    result.separation = std::get<0>(best_obj);
    result.found = true;
    return result;
}

std::vector<Symmetry> xzzx_row_symmetries(const StabilizerCode& code) {
    if (code.family != CodeFamily::xzzx) {
        throw std::invalid_argument("row symmetries require an XZZX code");
    }
    int d = code.lattice_size;
    std::vector<PauliString> dephasing;
    for (size_t q = 0; q < code.n; q++) {
        dephasing.push_back(PauliString::single(code.n, q, Pauli::Z));
    }
    std::vector<Symmetry> out(static_cast<size_t>(d));
    for (auto& sym : out) {
        sym.restriction = dephasing;
    }
    for (size_t g = 0; g < code.generators.size(); g++) {
        out[static_cast<size_t>(code.face_meta[g].diag)].members.push_back(StabRef::gen(g));
    }
    return out;
}

std::vector<Symmetry> ballistic_symmetries(const StabilizerCode& code, int xi) {
    if (code.family != CodeFamily::surface) {
        throw std::invalid_argument("ballistic symmetries require a surface code");
    }
    if (xi < 1 || (xi > 1 && xi % 2 != 0)) {
        throw std::invalid_argument("ballistic symmetries need xi = 1 or even xi");
    }
    std::vector<PauliString> strings =
        ballistic_string_set(NoiseModel::ballistic(0, xi), code);

    if (xi == 1) {
        Symmetry sym = css_sector_symmetry(code, true);
        sym.restriction = strings;
        return {sym};
    }

    auto make_class = [&](bool by_col, int m) {
        Symmetry sym;
        sym.restriction = strings;
        PauliString product(code.n);
        for (size_t g : code.z_type) {
            double coord = by_col ? code.face_meta[g].col : code.face_meta[g].row;
            int fc = static_cast<int>(std::floor(coord));
            if (((fc % xi) + xi) % xi == m) {
                sym.members.push_back(StabRef::gen(g));
                product.multiply_inplace(code.generators[g]);
            }
        }
        // Close the class with its own boundary product, mirroring the
        // surface-code boundary stabilizer.
        sym.members.push_back(StabRef::auxiliary(product));
        sym.boundary_member = static_cast<int>(sym.members.size()) - 1;
        return sym;
    };

    std::vector<Symmetry> out;
    for (int m = 0; m < xi; m++) {
        out.push_back(make_class(true, m));
    }
    for (int m = 0; m < xi; m++) {
        out.push_back(make_class(false, m));
    }
    return out;
}

namespace {

Symmetry symmetry_over(const StabilizerCode& code, const std::vector<size_t>& indices) {
    Symmetry sym;
    PauliString product(code.n);
    for (size_t g : indices) {
        sym.members.push_back(StabRef::gen(g));
        product.multiply_inplace(code.generators[g]);
    }
    if (!product.is_identity()) {
        sym.members.push_back(StabRef::auxiliary(product));
        sym.boundary_member = static_cast<int>(sym.members.size()) - 1;
    }
    return sym;
}

}  // namespace

Symmetry css_sector_symmetry(const StabilizerCode& code, bool z_sector) {
    return symmetry_over(code, z_sector ? code.z_type : code.x_type);
}

Symmetry full_symmetry(const StabilizerCode& code) {
    std::vector<size_t> all(code.generators.size());
    for (size_t g = 0; g < all.size(); g++) all[g] = g;
    return symmetry_over(code, all);
}

}  // namespace symdec
