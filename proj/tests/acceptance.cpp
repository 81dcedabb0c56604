// Acceptance suite: one self-contained check per shipping criterion, each
// printing a PASS/FAIL line. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "symdec/blossom.hpp"
#include "symdec/codes.hpp"
#include "symdec/harness.hpp"
#include "symdec/matching.hpp"
#include "symdec/rng.hpp"
#include "symdec/serialize.hpp"
#include "symdec/symmetry.hpp"
#include "symdec/syndrome.hpp"
#include "symdec/unionfind.hpp"

using namespace symdec;

namespace {

double brute_force_min_perfect(int n, const std::vector<std::vector<double>>& w) {
    std::vector<int> pending;
    for (int v = 0; v < n; v++) pending.push_back(v);
    double best = std::numeric_limits<double>::infinity();
    std::function<void(double)> recurse = [&](double acc) {
        if (pending.empty()) {
            best = std::min(best, acc);
            return;
        }
        int u = pending.front();
        for (size_t i = 1; i < pending.size(); i++) {
            int v = pending[i];
            std::vector<int> rest;
            for (size_t j = 1; j < pending.size(); j++) {
                if (j != i) rest.push_back(pending[j]);
            }
            std::swap(rest, pending);
            recurse(acc + w[u][v]);
            std::swap(rest, pending);
        }
    };
    recurse(0.0);
    return best;
}

// Criterion 1: exact agreement with brute force on 10^3 random graphs.
bool criterion_mwpm_oracle(std::string& detail) {
    Rng rng(10001);
    for (int trial = 0; trial < 1000; trial++) {
        int n = 2 * (1 + static_cast<int>(rng.next_u64() % 6));  // 2..12 vertices
        std::vector<std::vector<double>> w(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n), 0));
        std::vector<WeightedEdge> edges;
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                double weight = static_cast<double>(rng.next_u64() % 1000);
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] = weight;
                w[static_cast<size_t>(j)][static_cast<size_t>(i)] = weight;
                edges.emplace_back(i, j, weight);
            }
        }
        std::vector<int> mate = min_weight_perfect_matching(n, edges);
        double got = 0;
        for (int v = 0; v < n; v++) {
            if (mate[static_cast<size_t>(v)] > v) {
                got += w[static_cast<size_t>(v)][static_cast<size_t>(mate[static_cast<size_t>(v)])];
            }
        }
        double want = brute_force_min_perfect(n, w);
        if (got != want) {
            detail = "mismatch at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "1000 graphs, exact equality";
    return true;
}

// Criteria 2 and 3: every X error of weight <= floor((d-1)/2) is corrected.
bool distance_guarantee(DecoderKind kind, std::string& detail) {
    long checked = 0;
    for (int d : {3, 5}) {
        StabilizerCode code = build_surface_code(d);
        Decoder decoder(code, NoiseModel::bitflip(0.05), DecodeOptions{kind, 0});
        size_t max_w = static_cast<size_t>((d - 1) / 2);

        std::vector<size_t> stack;
        std::function<bool(size_t, size_t)> sweep = [&](size_t start, size_t left) -> bool {
            if (left == 0) {
                PauliString error(code.n);
                for (size_t q : stack) error.set(q, Pauli::X);
                DetectionEvents events =
                    events_from_syndrome(extract_syndrome(code, error));
                PauliString correction = decoder.decode(events);
                LogicalClass cls = logical_class(code, multiply(correction, error));
                checked++;
                return cls.is_trivial();
            }
            for (size_t q = start; q + left <= code.n; q++) {
                stack.push_back(q);
                bool ok = sweep(q + 1, left - 1);
                stack.pop_back();
                if (!ok) return false;
            }
            return true;
        };
        for (size_t w = 1; w <= max_w; w++) {
            if (!sweep(0, w)) {
                detail = "uncorrected weight-" + std::to_string(w) + " error at d=" +
                         std::to_string(d);
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " errors, all corrected";
    return true;
}

// Criterion 4: zero defect-parity violations over sampled noise.
bool criterion_conservation(std::string& detail) {
    const long shots = 10000;
    long audited = 0;

    struct Config {
        StabilizerCode code;
        NoiseModel channel;
    };
    std::vector<Config> configs;
    configs.push_back({build_surface_code(5), NoiseModel::bitflip(0.1)});
    configs.push_back({build_surface_code(5), NoiseModel::phenomenological(0.02, 0.02, 5)});
    configs.push_back({build_xzzx_code(5), NoiseModel::biased(0, 0, 0.1)});
    configs.push_back({build_surface_code(5), NoiseModel::ballistic(0.02, 2)});

    for (size_t c = 0; c < configs.size(); c++) {
        const StabilizerCode& code = configs[c].code;
        const NoiseModel& channel = configs[c].channel;
        std::vector<Symmetry> symmetries = audit_symmetries(code, channel);
        for (long s = 0; s < shots; s++) {
            Rng rng(Rng::derive(40000 + static_cast<uint64_t>(c), static_cast<uint64_t>(s)));
            if (channel.kind == NoiseKind::phenomenological) {
                ErrorSample sample = sample_phenomenological(channel, code, rng);
                for (const Symmetry& sigma : symmetries) {
                    DetectionEvents ev = events_with_aux(code, sigma, sample);
                    if (total_event_parity(ev, sigma, code) != 0) {
                        detail = "violation in config " + std::to_string(c);
                        return false;
                    }
                    audited++;
                }
            } else {
                PauliString error = channel.kind == NoiseKind::ballistic
                                        ? sample_ballistic(channel, code, rng)
                                        : sample_iid(channel.pauli_channel(), code.n, rng);
                for (const Symmetry& sigma : symmetries) {
                    Syndrome syn = syndrome_with_aux(code, sigma, error);
                    if (defect_parity(sigma, code, syn) != 0) {
                        detail = "violation in config " + std::to_string(c);
                        return false;
                    }
                    audited++;
                }
            }
        }
    }
    detail = std::to_string(audited) + " parity checks, zero violations";
    return true;
}

// Criterion 5: repetition-code rates match the majority-vote binomial.
bool criterion_repetition_analytic(std::string& detail) {
    const long shots = 100000;
    struct Case {
        int d;
        double expected;
    };
    std::ostringstream summary;
    for (Case c : {Case{3, 0.028}, Case{5, 0.00856}}) {
        StabilizerCode code = build_repetition_code(c.d);
        NoiseModel channel = NoiseModel::bitflip(0.1);
        ResultRow row = run_point(code, channel, DecoderKind::mwpm, shots,
                                  point_seed(50000, c.d, 0.1), 1);
        double sigma = std::sqrt(c.expected * (1 - c.expected) / static_cast<double>(shots));
        if (std::abs(row.rate - c.expected) >= 5 * sigma) {
            detail = "d=" + std::to_string(c.d) + " rate " + std::to_string(row.rate) +
                     " vs " + std::to_string(c.expected);
            return false;
        }
        summary << "d=" << c.d << ": " << row.rate << " vs " << c.expected << "  ";
    }
    detail = summary.str();
    return true;
}

// Criterion 6: strictly decreasing failure rates below threshold, and a
// d=5 / d=7 curve crossing inside (0.05, 0.15).
bool criterion_suppression(std::string& detail) {
    const long shots = 10000;
    std::vector<ResultRow> at_low;
    for (int d : {3, 5, 7}) {
        StabilizerCode code = build_surface_code(d);
        at_low.push_back(run_point(code, NoiseModel::bitflip(0.05), DecoderKind::mwpm,
                                   shots, point_seed(60000, d, 0.05), 1));
    }
    for (size_t i = 0; i + 1 < at_low.size(); i++) {
        if (!(at_low[i + 1].rate < at_low[i].rate) || !(at_low[i + 1].hi95 < at_low[i].lo95)) {
            detail = "no suppression between d=" + std::to_string(at_low[i].d) + " and d=" +
                     std::to_string(at_low[i + 1].d);
            return false;
        }
    }

    ExperimentConfig sweep;
    sweep.family = CodeFamily::surface;
    sweep.sizes = {5, 7};
    sweep.channel = NoiseModel::bitflip(0.05);
    sweep.rates = {0.05, 0.07, 0.09, 0.11, 0.13, 0.15};
    sweep.shots = shots;
    sweep.seed = 60001;
    sweep.workers = 1;
    std::vector<ResultRow> rows = run_sweep(sweep, nullptr);
    std::vector<CrossingEstimate> crossings = find_crossing(rows);
    if (crossings.empty() || !crossings[0].found || crossings[0].p <= 0.05 ||
        crossings[0].p >= 0.15) {
        detail = "no d=5/d=7 crossing inside (0.05, 0.15)";
        return false;
    }
    std::ostringstream summary;
    summary << "rates(p=0.05): ";
    for (const ResultRow& row : at_low) summary << row.rate << " ";
    summary << " crossing near p=" << crossings[0].p;
    detail = summary.str();
    return true;
}

// Criterion 7: pure dephasing on the XZZX code reduces to d independent
// distance-d repetition codes.
bool criterion_xzzx_reduction(std::string& detail) {
    const int d = 5;
    const long shots = 10000;
    StabilizerCode code = build_xzzx_code(d);
    NoiseModel channel = NoiseModel::biased(0, 0, 0.1);
    ResultRow row = run_point(code, channel, DecoderKind::mwpm, shots,
                              point_seed(70000, d, 0.1), 1);
    double r5 = 10 * std::pow(0.1, 3) * std::pow(0.9, 2) + 5 * std::pow(0.1, 4) * 0.9 +
                std::pow(0.1, 5);
    double expected = 1.0 - std::pow(1.0 - r5, d);
    std::ostringstream summary;
    summary << "rate " << row.rate << " vs analytic " << expected << " (CI [" << row.lo95
            << ", " << row.hi95 << "])";
    detail = summary.str();
    return row.lo95 <= expected && expected <= row.hi95;
}

// Criterion 8: space-time event structure of forced single faults.
bool criterion_event_structure(std::string& detail) {
    StabilizerCode code = build_surface_code(3);
    const int rounds = 4;
    long checked = 0;
    for (size_t g = 0; g < code.generators.size(); g++) {
        for (int t = 0; t + 1 < rounds; t++) {
            ErrorSample sample;
            sample.cumulative.assign(rounds, PauliString(code.n));
            sample.measurement_flips.emplace_back(g, t);
            DetectionEvents ev = detection_events(code, sample);
            checked++;
            if (ev.events.size() != 2 || ev.events[0].first != g ||
                ev.events[1].first != g || ev.events[1].second != ev.events[0].second + 1) {
                detail = "flip event structure broken at g=" + std::to_string(g);
                return false;
            }
        }
    }
    for (size_t q = 0; q < code.n; q++) {
        for (int t = 0; t < rounds; t++) {
            ErrorSample sample;
            sample.cumulative.assign(rounds, PauliString(code.n));
            PauliString err = PauliString::single(code.n, q, Pauli::X);
            for (int u = t; u < rounds; u++) sample.cumulative[static_cast<size_t>(u)] = err;
            DetectionEvents ev = detection_events(code, sample);
            checked++;
            if (ev.events.empty() || ev.events.size() > 2) {
                detail = "data event count out of range at q=" + std::to_string(q);
                return false;
            }
            for (const auto& [gen, round] : ev.events) {
                (void)gen;
                if (round != t) {
                    detail = "data events not space-like at q=" + std::to_string(q);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(checked) + " forced faults";
    return true;
}

// Criterion 9: cleaning regression on surface and toric codes.
bool criterion_cleaning(std::string& detail) {
    for (int d : {3, 5, 7}) {
        StabilizerCode code = build_surface_code(d);
        CleaningResult result = clean_logical(code, code.logical_pairs[0].second);
        PauliString all_z(code.n);
        for (size_t g : code.z_type) all_z.multiply_inplace(code.generators[g]);
        if (!result.found || result.wrapped || result.b != all_z) {
            detail = "surface d=" + std::to_string(d) + " cleaning stabilizer wrong";
            return false;
        }
        for (const auto& [q, p] : result.far_logical.support()) {
            if (p != Pauli::Z || code.qubit_coords[q].row != d - 1) {
                detail = "surface d=" + std::to_string(d) + " far logical off the far boundary";
                return false;
            }
        }
        if (!verify_materialised(code, result.sigma)) {
            detail = "surface cleaning symmetry is not materialised";
            return false;
        }
    }
    StabilizerCode toric = build_toric_code(3);
    CleaningResult wrap = clean_logical(toric, toric.logical_pairs[0].second);
    if (!wrap.found || !wrap.wrapped || !wrap.b.is_identity() ||
        wrap.far_logical != toric.logical_pairs[0].second) {
        detail = "toric cleaning did not wrap onto itself";
        return false;
    }
    detail = "surface d=3,5,7 and toric L=3";
    return true;
}

// Criterion 10: byte-identical CSV across reruns and worker counts.
bool criterion_determinism(std::string& detail) {
    ExperimentConfig config;
    config.family = CodeFamily::surface;
    config.sizes = {3, 5};
    config.channel = NoiseModel::bitflip(0.05);
    config.rates = {0.03, 0.06, 0.09};
    config.shots = 2000;
    config.seed = 424242;

    std::ostringstream a, b;
    config.workers = 1;
    run_sweep(config, &a);
    config.workers = 3;
    run_sweep(config, &b);
    if (a.str() != b.str()) {
        detail = "CSV differs across worker counts";
        return false;
    }
    detail = std::to_string(a.str().size()) + " identical bytes";
    return true;
}

struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "MWPM brute-force oracle equivalence", criterion_mwpm_oracle},
        {2, "distance guarantee, MWPM",
         [](std::string& d) { return distance_guarantee(DecoderKind::mwpm, d); }},
        {3, "distance guarantee, union-find",
         [](std::string& d) { return distance_guarantee(DecoderKind::unionfind, d); }},
        {4, "defect-parity conservation audit", criterion_conservation},
        {5, "repetition-code analytic match", criterion_repetition_analytic},
        {6, "sub-threshold suppression and crossing", criterion_suppression},
        {7, "XZZX infinite-bias repetition reduction", criterion_xzzx_reduction},
        {8, "phenomenological event structure", criterion_event_structure},
        {9, "cleaning construction regression", criterion_cleaning},
        {10, "sweep determinism across workers", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %2d: %s — %s [%.1fs]\n", ok ? "PASS" : "FAIL", c.id,
                    c.label, detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) failures++;
    }
    return failures;
}
