#include "symdec/noise.hpp"

#include <stdexcept>

#include "symdec/syndrome.hpp"

namespace symdec {

void PauliChannel::validate() const {
    if (p_x < 0 || p_y < 0 || p_z < 0 || total() > 1.0 + 1e-12) {
        throw std::invalid_argument("invalid Pauli channel probabilities");
    }
}

PauliChannel NoiseModel::pauli_channel() const {
    switch (kind) {
        case NoiseKind::bitflip:
        case NoiseKind::phenomenological:
            return {p, 0, 0};
        case NoiseKind::biased:
            return {px, py, pz};
        case NoiseKind::ballistic:
            throw std::logic_error("ballistic noise has no per-qubit Pauli channel");
    }
    return {};
}

double NoiseModel::x_marginal() const {
    PauliChannel c = pauli_channel();
    return c.p_x + c.p_y;
}

double NoiseModel::z_marginal() const {
    PauliChannel c = pauli_channel();
    return c.p_z + c.p_y;
}

bool NoiseModel::is_pure_z() const {
    if (kind == NoiseKind::ballistic || kind == NoiseKind::phenomenological) return false;
    PauliChannel c = pauli_channel();
    return c.p_x == 0 && c.p_y == 0;
}

void NoiseModel::validate() const {
    switch (kind) {
        case NoiseKind::bitflip:
        case NoiseKind::biased:
            pauli_channel().validate();
            break;
        case NoiseKind::phenomenological: {
            pauli_channel().validate();
            double flip = measurement_flip_rate();
            if (flip < 0 || flip > 1) {
                throw std::invalid_argument("invalid measurement flip probability");
            }
            if (rounds < 1) {
                throw std::invalid_argument("phenomenological noise needs rounds >= 1");
            }
            break;
        }
        case NoiseKind::ballistic:
            if (p_string < 0 || p_string > 1) {
                throw std::invalid_argument("invalid string probability");
            }
            if (xi < 1) {
                throw std::invalid_argument("ballistic string length must be >= 1");
            }
            break;
    }
}

NoiseModel NoiseModel::bitflip(double p) {
    NoiseModel m;
    m.kind = NoiseKind::bitflip;
    m.p = p;
    return m;
}

NoiseModel NoiseModel::biased(double px, double py, double pz) {
    NoiseModel m;
    m.kind = NoiseKind::biased;
    m.px = px;
    m.py = py;
    m.pz = pz;
    m.p = px + py + pz;
    return m;
}

NoiseModel NoiseModel::phenomenological(double p, double q, int rounds) {
    NoiseModel m;
    m.kind = NoiseKind::phenomenological;
    m.p = p;
    m.q = q;
    m.rounds = rounds;
    return m;
}

NoiseModel NoiseModel::ballistic(double p_string, int xi) {
    NoiseModel m;
    m.kind = NoiseKind::ballistic;
    m.p_string = p_string;
    m.xi = xi;
    return m;
}

NoiseModel NoiseModel::with_rate(double rate) const {
    NoiseModel m = *this;
    switch (kind) {
        case NoiseKind::bitflip:
        case NoiseKind::phenomenological:
            m.p = rate;
            break;
        case NoiseKind::biased: {
            double total = px + py + pz;
            if (total <= 0) {
                throw std::invalid_argument("biased channel needs a nonzero bias profile");
            }
            m.px = px * rate / total;
            m.py = py * rate / total;
            m.pz = pz * rate / total;
            m.p = rate;
            break;
        }
        case NoiseKind::ballistic:
            m.p_string = rate;
            break;
    }
    return m;
}

PauliString sample_iid(const PauliChannel& channel, size_t n, Rng& rng) {
    channel.validate();
    PauliString out(n);
    double tx = channel.p_x;
    double txy = channel.p_x + channel.p_y;
    double txyz = channel.total();
    for (size_t q = 0; q < n; q++) {
        double u = rng.next_double();
        if (u >= txyz) continue;
        if (u < tx) {
            out.set(q, Pauli::X);
        } else if (u < txy) {
            out.set(q, Pauli::Y);
        } else {
            out.set(q, Pauli::Z);
        }
    }
    return out;
}

ErrorSample sample_phenomenological(const NoiseModel& model, const StabilizerCode& code,
                                    Rng& rng) {
    model.validate();
    if (model.kind != NoiseKind::phenomenological) {
        throw std::invalid_argument("expected a phenomenological noise model");
    }
    PauliChannel data = model.pauli_channel();
    double flip = model.measurement_flip_rate();
    ErrorSample sample;
    PauliString running(code.n);
    for (int t = 0; t < model.rounds; t++) {
        running.multiply_inplace(sample_iid(data, code.n, rng));
        sample.cumulative.push_back(running);
        if (t + 1 < model.rounds) {  // final round is read perfectly
            for (size_t g = 0; g < code.generators.size(); g++) {
                if (rng.bernoulli(flip)) {
                    sample.measurement_flips.emplace_back(g, t);
                }
            }
        }
    }
    return sample;
}

std::vector<PauliString> ballistic_string_set(const NoiseModel& model,
                                              const StabilizerCode& code) {
    if (code.family != CodeFamily::surface) {
        throw std::invalid_argument("ballistic noise is defined for the surface code");
    }
    int d = code.lattice_size;
    int xi = model.xi;
    std::vector<PauliString> strings;
    auto qubit = [d](int r, int c) { return static_cast<size_t>(r * d + c); };
    for (int r = 0; r < d; r++) {
        for (int c = 0; c + xi <= d; c++) {
            PauliString s(code.n);
            for (int k = 0; k < xi; k++) s.set(qubit(r, c + k), Pauli::X);
            strings.push_back(std::move(s));
        }
    }
    if (xi > 1) {
        for (int r = 0; r + xi <= d; r++) {
            for (int c = 0; c < d; c++) {
                PauliString s(code.n);
                for (int k = 0; k < xi; k++) s.set(qubit(r + k, c), Pauli::X);
                strings.push_back(std::move(s));
            }
        }
    }
    return strings;
}

PauliString sample_ballistic(const NoiseModel& model, const StabilizerCode& code, Rng& rng) {
    model.validate();
    if (model.kind != NoiseKind::ballistic) {
        throw std::invalid_argument("expected a ballistic noise model");
    }
    PauliString out(code.n);
    for (const PauliString& s : ballistic_string_set(model, code)) {
        if (rng.bernoulli(model.p_string)) {
            out.multiply_inplace(s);
        }
    }
    return out;
}

double event_probability(const NoiseModel& model, const ElementaryEvent& event) {
    switch (event.kind) {
        case ElementaryEvent::Kind::pauli: {
            if (model.kind == NoiseKind::ballistic) {
                throw std::invalid_argument("ballistic channel has no single-qubit events");
            }
            if (event.op.weight() != 1) {
                throw std::invalid_argument("pauli event must act on a single qubit");
            }
            Pauli label = event.op.support()[0].second;
            PauliChannel c = model.pauli_channel();
            // Marginals as seen by the two CSS decoding problems: Y is
            // regarded as the product of an X and a Z error.
            if (label == Pauli::X) return c.p_x + c.p_y;
            if (label == Pauli::Z) return c.p_z + c.p_y;
            return c.p_y;
        }
        case ElementaryEvent::Kind::measurement_flip:
            if (model.kind != NoiseKind::phenomenological) {
                throw std::invalid_argument("channel has no measurement flips");
            }
            return model.measurement_flip_rate();
        case ElementaryEvent::Kind::string: {
            if (model.kind != NoiseKind::ballistic) {
                throw std::invalid_argument("channel has no string events");
            }
            if (event.op.weight() != static_cast<size_t>(model.xi) ||
                !event.op.z_bits().is_zero()) {
                throw std::invalid_argument("event is not a length-xi X string");
            }
            return model.p_string;
        }
    }
    throw std::invalid_argument("unrecognised event");
}

}  // namespace symdec
