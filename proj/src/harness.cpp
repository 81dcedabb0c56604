#include "symdec/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "symdec/codes.hpp"
#include "symdec/rng.hpp"
#include "symdec/symmetry.hpp"
#include "symdec/syndrome.hpp"

namespace symdec {

WilsonInterval wilson_interval(long failures, long shots) {
    if (shots <= 0) return {0, 0};
    const double z = 1.959963984540054;
    double n = static_cast<double>(shots);
    double phat = static_cast<double>(failures) / n;
    double denom = 1.0 + z * z / n;
    double center = (phat + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
    double lo = failures == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = failures == shots ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

uint64_t point_seed(uint64_t master, int d, double p) {
    // FNV-1a over the point coordinates, then mixed; the worker count never
    // enters, so results are reproducible under any parallelism.
    uint64_t h = 1469598103934665603ull;
    auto absorb = [&h](uint64_t v) {
        for (int i = 0; i < 8; i++) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    absorb(static_cast<uint64_t>(d));
    uint64_t pbits;
    static_assert(sizeof(pbits) == sizeof(p));
    std::memcpy(&pbits, &p, sizeof(pbits));
    absorb(pbits);
    uint64_t s = master ^ h;
    return Rng::splitmix64(s);
}

StabilizerCode build_code(CodeFamily family, int size) {
    switch (family) {
        case CodeFamily::surface: return build_surface_code(size);
        case CodeFamily::xzzx: return build_xzzx_code(size);
        case CodeFamily::toric: return build_toric_code(size);
        case CodeFamily::repetition: return build_repetition_code(size);
        case CodeFamily::custom: break;
    }
    throw std::invalid_argument("cannot build a custom code from a size alone");
}

std::vector<Symmetry> audit_symmetries(const StabilizerCode& code,
                                       const NoiseModel& channel) {
    if (code.family == CodeFamily::xzzx && channel.is_pure_z()) {
        return xzzx_row_symmetries(code);
    }
    if (channel.kind == NoiseKind::ballistic) {
        return ballistic_symmetries(code, channel.xi);
    }
    std::vector<Symmetry> out;
    if (!code.z_type.empty()) out.push_back(css_sector_symmetry(code, true));
    if (!code.x_type.empty()) out.push_back(css_sector_symmetry(code, false));
    return out;
}

namespace {

struct Shot {
    PauliString final_error;
    DetectionEvents events;
    ErrorSample sample;  // phenomenological only
    bool has_sample = false;
};

Shot sample_shot(const StabilizerCode& code, const NoiseModel& channel, Rng& rng) {
    Shot shot;
    switch (channel.kind) {
        case NoiseKind::bitflip:
        case NoiseKind::biased: {
            shot.final_error = sample_iid(channel.pauli_channel(), code.n, rng);
            shot.events = events_from_syndrome(extract_syndrome(code, shot.final_error));
            break;
        }
        case NoiseKind::phenomenological: {
            shot.sample = sample_phenomenological(channel, code, rng);
            shot.has_sample = true;
            shot.final_error = shot.sample.final_error();
            shot.events = detection_events(code, shot.sample);
            break;
        }
        case NoiseKind::ballistic: {
            shot.final_error = sample_ballistic(channel, code, rng);
            shot.events = events_from_syndrome(extract_syndrome(code, shot.final_error));
            break;
        }
    }
    return shot;
}

void audit_shot(const StabilizerCode& code, const std::vector<Symmetry>& symmetries,
                const Shot& shot) {
    for (const Symmetry& sigma : symmetries) {
        int parity;
        if (shot.has_sample) {
            DetectionEvents extended = events_with_aux(code, sigma, shot.sample);
            parity = total_event_parity(extended, sigma, code);
        } else {
            Syndrome extended = syndrome_with_aux(code, sigma, shot.final_error);
            parity = defect_parity(sigma, code, extended);
        }
        if (parity != 0) {
            throw std::logic_error("defect-parity conservation law violated");
        }
    }
}

}  // namespace

ResultRow run_point(const StabilizerCode& code, const NoiseModel& channel,
                    DecoderKind decoder, long shots, uint64_t seed, int workers,
                    bool timing, int truncation) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    DecodeOptions options;
    options.decoder = decoder;
    options.truncation = truncation;
    Decoder dec(code, channel, options);
    std::vector<Symmetry> symmetries = audit_symmetries(code, channel);

    workers = std::max(1, workers);
    std::vector<long> failures_per_worker(static_cast<size_t>(workers), 0);
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto t0 = std::chrono::steady_clock::now();
    auto work = [&](int wid) {
        try {
            long local = 0;
            for (long s = wid; s < shots; s += workers) {
                Rng rng(Rng::derive(seed, static_cast<uint64_t>(s)));
                Shot shot = sample_shot(code, channel, rng);
                audit_shot(code, symmetries, shot);
                PauliString correction = dec.decode(shot.events);
                PauliString residual = multiply(correction, shot.final_error);
                LogicalClass cls = logical_class(code, residual);
                if (!cls.in_normalizer) {
                    throw std::logic_error("correction failed to clear the syndrome");
                }
                if (!cls.is_trivial()) {
                    local++;
                } else if (s % 100 == 0 && !code.in_stabilizer_group(residual)) {
                    throw std::logic_error("trivial logical class outside stabilizer group");
                }
            }
            failures_per_worker[static_cast<size_t>(wid)] = local;
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; w++) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    auto t1 = std::chrono::steady_clock::now();

    ResultRow row;
    row.d = code.lattice_size;
    row.p = channel.rate();
    row.shots = shots;
    for (long f : failures_per_worker) row.failures += f;
    row.rate = static_cast<double>(row.failures) / static_cast<double>(shots);
    WilsonInterval ci = wilson_interval(row.failures, shots);
    row.lo95 = ci.lo;
    row.hi95 = ci.hi;
    if (timing) {
        double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
        row.ns_per_shot = ns / static_cast<double>(shots);
    }
    return row;
}

std::string csv_header() { return "d,p,shots,failures,rate,lo95,hi95,ns_per_shot"; }

void write_csv_row(std::ostream& out, const ResultRow& row) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%d,%.10g,%ld,%ld,%.10g,%.10g,%.10g,%.10g", row.d, row.p,
                  row.shots, row.failures, row.rate, row.lo95, row.hi95, row.ns_per_shot);
    out << buf << "\n";
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& config, std::ostream* csv) {
    if (config.sizes.empty() || config.rates.empty()) {
        throw std::invalid_argument("sweep needs at least one size and one rate");
    }
    if (csv != nullptr) {
        *csv << csv_header() << "\n";
    }
    std::vector<ResultRow> rows;
    for (int d : config.sizes) {
        StabilizerCode code = build_code(config.family, d);
        for (double rate : config.rates) {
            NoiseModel channel = config.channel.with_rate(rate);
            uint64_t seed = point_seed(config.seed, d, rate);
            ResultRow row = run_point(code, channel, config.decoder, config.shots, seed,
                                      config.workers, config.timing, config.truncation);
            if (csv != nullptr) {
                write_csv_row(*csv, row);
                csv->flush();
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<CrossingEstimate> find_crossing(const std::vector<ResultRow>& rows) {
    std::map<int, std::vector<const ResultRow*>> by_size;
    for (const ResultRow& row : rows) {
        by_size[row.d].push_back(&row);
    }
    std::vector<int> sizes;
    for (const auto& [d, _] : by_size) sizes.push_back(d);
    if (sizes.size() < 2) {
        throw std::invalid_argument("crossing detection needs at least two sizes");
    }

    std::vector<CrossingEstimate> out;
    for (size_t s = 0; s + 1 < sizes.size(); s++) {
        const auto& small = by_size[sizes[s]];
        const auto& large = by_size[sizes[s + 1]];
        if (small.size() < 3 || small.size() != large.size()) {
            throw std::invalid_argument("crossing detection needs >= 3 matching rates");
        }
        CrossingEstimate est;
        est.d_small = sizes[s];
        est.d_large = sizes[s + 1];
        bool separated_below = false, separated_above = false;
        for (size_t i = 0; i + 1 < small.size(); i++) {
            double da = small[i]->rate - large[i]->rate;
            double db = small[i + 1]->rate - large[i + 1]->rate;
            if (!est.found && ((da >= 0 && db < 0) || (da <= 0 && db > 0) ||
                               (da > 0 && db <= 0) || (da < 0 && db >= 0))) {
                double denom = da - db;
                double frac = denom == 0 ? 0.5 : da / denom;
                est.p = small[i]->p + frac * (small[i + 1]->p - small[i]->p);
                est.found = true;
            }
        }
        for (size_t i = 0; i < small.size(); i++) {
            if (large[i]->hi95 < small[i]->lo95) separated_below = true;
            if (small[i]->hi95 < large[i]->lo95) separated_above = true;
        }
        est.resolved = est.found && separated_below && separated_above;
        // Failure rates should not drop as p grows; flag violations that
        // exceed interval noise.
        for (const auto& curve : {small, large}) {
            for (size_t i = 0; i + 1 < curve.size(); i++) {
                if (curve[i + 1]->hi95 < curve[i]->lo95) {
                    est.monotonicity_warning = true;
                }
            }
        }
        out.push_back(est);
    }
    return out;
}

}  // namespace symdec
