#include <doctest.h>

#include <chrono>

#include "symdec/codes.hpp"
#include "symdec/matching.hpp"
#include "symdec/rng.hpp"
#include "symdec/symmetry.hpp"
#include "symdec/syndrome.hpp"
#include "symdec/unionfind.hpp"

using namespace symdec;

namespace {

DetectionEvents syndrome_events(const StabilizerCode& code, const PauliString& error) {
    return events_from_syndrome(extract_syndrome(code, error));
}

}  // namespace

TEST_CASE("cluster growth on simple configurations") {
    StabilizerCode code = build_surface_code(3);
    NoiseModel channel = NoiseModel::bitflip(0.1);
    DetectorGraph detector = build_detector_graph(code, channel, css_sector_symmetry(code, true));

    // No events: every cluster is a frozen singleton.
    ClusterState empty = grow_clusters(detector, DetectionEvents{});
    CHECK(peel(empty).is_identity());

    // Two adjacent events merge into one even cluster.
    DetectionEvents pair = syndrome_events(code, PauliString::parse("X4", code.n));
    REQUIRE(pair.events.size() == 2);
    ClusterState merged = grow_clusters(detector, pair);
    int a = detector.node_id(pair.events[0].first, 0);
    int b = detector.node_id(pair.events[1].first, 0);
    CHECK(merged.find(a) == merged.find(b));
    CHECK(merged.parity[static_cast<size_t>(merged.find(a))] % 2 == 0);

    // A lone boundary-adjacent event freezes on boundary contact.
    DetectionEvents lone = syndrome_events(code, PauliString::parse("X1", code.n));
    REQUIRE(lone.events.size() == 1);
    ClusterState frozen = grow_clusters(detector, lone);
    int c = detector.node_id(lone.events[0].first, 0);
    CHECK(frozen.touches_boundary[static_cast<size_t>(frozen.find(c))]);
}

TEST_CASE("peeling emits the matched error back") {
    StabilizerCode code = build_surface_code(3);
    NoiseModel channel = NoiseModel::bitflip(0.1);
    DetectorGraph detector = build_detector_graph(code, channel, css_sector_symmetry(code, true));

    PauliString error = PauliString::parse("X4", code.n);
    PauliString correction = unionfind_decode(detector, syndrome_events(code, error));
    CHECK(extract_syndrome(code, correction).defects ==
          extract_syndrome(code, error).defects);
    CHECK(logical_class(code, multiply(correction, error)).is_trivial());
}

TEST_CASE("union-find corrects every weight-1 error on d=3") {
    StabilizerCode code = build_surface_code(3);
    Decoder decoder(code, NoiseModel::bitflip(0.1),
                    DecodeOptions{DecoderKind::unionfind, 0});
    for (size_t q = 0; q < code.n; q++) {
        PauliString error = PauliString::single(code.n, q, Pauli::X);
        PauliString correction = decoder.decode(syndrome_events(code, error));
        CHECK(logical_class(code, multiply(correction, error)).is_trivial());
    }
}

TEST_CASE("union-find always clears the syndrome on random errors") {
    StabilizerCode code = build_surface_code(5);
    NoiseModel channel = NoiseModel::bitflip(0.1);
    Decoder decoder(code, channel, DecodeOptions{DecoderKind::unionfind, 0});
    Rng rng(9001);
    for (int shot = 0; shot < 1000; shot++) {
        PauliString error = sample_iid(channel.pauli_channel(), code.n, rng);
        PauliString correction = decoder.decode(syndrome_events(code, error));
        CHECK(extract_syndrome(code, multiply(correction, error)).empty());
        CHECK(logical_class(code, multiply(correction, error)).in_normalizer);
    }
}

TEST_CASE("union-find handles the toric code without a boundary") {
    StabilizerCode code = build_toric_code(3);
    NoiseModel channel = NoiseModel::bitflip(0.08);
    Decoder decoder(code, channel, DecodeOptions{DecoderKind::unionfind, 0});
    Rng rng(515);
    for (int shot = 0; shot < 500; shot++) {
        PauliString error = sample_iid(channel.pauli_channel(), code.n, rng);
        PauliString correction = decoder.decode(syndrome_events(code, error));
        CHECK(extract_syndrome(code, multiply(correction, error)).empty());
    }
}

TEST_CASE("union-find decode time grows near-linearly with code size") {
    // Sanity bound, not a proof: per-shot time at d=21 stays within 25x the
    // per-shot time at d=7 at fixed p.
    auto time_per_shot = [](int d) {
        StabilizerCode code = build_surface_code(d);
        NoiseModel channel = NoiseModel::bitflip(0.05);
        Decoder decoder(code, channel, DecodeOptions{DecoderKind::unionfind, 0});
        Rng rng(2025);
        const int shots = 60;
        // Warm-up shot keeps one-time allocation out of the measurement;
        // minimum over repeats suppresses scheduler noise.
        PauliString warm = sample_iid(channel.pauli_channel(), code.n, rng);
        (void)decoder.decode(events_from_syndrome(extract_syndrome(code, warm)));
        double best = 1e30;
        for (int repeat = 0; repeat < 3; repeat++) {
            auto t0 = std::chrono::steady_clock::now();
            for (int s = 0; s < shots; s++) {
                PauliString error = sample_iid(channel.pauli_channel(), code.n, rng);
                (void)decoder.decode(events_from_syndrome(extract_syndrome(code, error)));
            }
            auto t1 = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count() / shots);
        }
        return best;
    };
    double small = time_per_shot(7);
    double large = time_per_shot(21);
    INFO("d=7: ", small, "s  d=21: ", large, "s");
    CHECK(large <= 25.0 * small);
}

TEST_CASE("union-find decodes space-time events") {
    StabilizerCode code = build_surface_code(3);
    NoiseModel channel = NoiseModel::phenomenological(0.03, 0.03, 4);
    Decoder decoder(code, channel, DecodeOptions{DecoderKind::unionfind, 0});
    Rng rng(271828);
    for (int shot = 0; shot < 300; shot++) {
        ErrorSample sample = sample_phenomenological(channel, code, rng);
        DetectionEvents events = detection_events(code, sample);
        PauliString correction = decoder.decode(events);
        // The correction must clear the final-round syndrome.
        CHECK(extract_syndrome(code, multiply(correction, sample.final_error())).empty());
    }
}
