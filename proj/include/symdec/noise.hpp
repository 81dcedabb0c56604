#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symdec/code.hpp"
#include "symdec/pauli.hpp"
#include "symdec/rng.hpp"

namespace symdec {

// Per-qubit, per-unit-time Pauli rates.
struct PauliChannel {
    double p_x = 0;
    double p_y = 0;
    double p_z = 0;

    double total() const { return p_x + p_y + p_z; }
    void validate() const;
};

enum class NoiseKind { bitflip, biased, phenomenological, ballistic };

// Tagged channel descriptor; mirrors the JSON wire format.
struct NoiseModel {
    NoiseKind kind = NoiseKind::bitflip;
    double p = 0;                 // bitflip rate / phenomenological data rate
    double px = 0, py = 0, pz = 0;  // biased
    double q = -1;                // measurement flip rate; negative means q = p
    int rounds = 1;
    double p_string = 0;
    int xi = 1;

    PauliChannel pauli_channel() const;
    double measurement_flip_rate() const { return q < 0 ? p : q; }
    // Marginal rate of an X (resp. Z) component on one qubit, with Y split
    // into both CSS sectors.
    double x_marginal() const;
    double z_marginal() const;
    bool is_pure_z() const;
    void validate() const;

    static NoiseModel bitflip(double p);
    static NoiseModel biased(double px, double py, double pz);
    static NoiseModel phenomenological(double p, double q, int rounds);
    static NoiseModel ballistic(double p_string, int xi);
    // Returns a copy with the swept rate parameter set to `rate` (p for iid
    // and phenomenological models, p_string for ballistic).
    NoiseModel with_rate(double rate) const;
    double rate() const { return kind == NoiseKind::ballistic ? p_string : p; }
};

// One sampled noise realisation: the cumulative data error after each round
// plus the set of flipped measurement outcomes.
struct ErrorSample {
    std::vector<PauliString> cumulative;               // one entry per round
    std::vector<std::pair<size_t, int>> measurement_flips;  // (generator, round)

    const PauliString& final_error() const { return cumulative.back(); }
    int rounds() const { return static_cast<int>(cumulative.size()); }
};

PauliString sample_iid(const PauliChannel& channel, size_t n, Rng& rng);

// Fresh iid data noise accumulates every round; measurement outcomes flip
// independently with probability q except in the final round, which is read
// perfectly so the space-time defect count stays even.
ErrorSample sample_phenomenological(const NoiseModel& model, const StabilizerCode& code,
                                    Rng& rng);

// Axis-aligned X strings of exactly xi qubits. Anchors are restricted so
// every string fits inside the lattice; overlapping strings compose.
PauliString sample_ballistic(const NoiseModel& model, const StabilizerCode& code, Rng& rng);

// All strings the ballistic channel can produce (the generating set of its
// error model).
std::vector<PauliString> ballistic_string_set(const NoiseModel& model,
                                              const StabilizerCode& code);

// A single elementary error event whose prior the channel can evaluate.
struct ElementaryEvent {
    enum class Kind { pauli, measurement_flip, string } kind = Kind::pauli;
    PauliString op;          // pauli / string kinds
    size_t generator = 0;    // measurement_flip kind
    int round = 0;
};

// Prior probability pi(alpha) of one elementary event; exp(-weight) source
// for the decoding graphs. Throws if the channel does not recognise the
// event's shape.
double event_probability(const NoiseModel& model, const ElementaryEvent& event);

}  // namespace symdec
