#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symdec/code.hpp"
#include "symdec/matching.hpp"
#include "symdec/noise.hpp"

namespace symdec {

struct ExperimentConfig {
    CodeFamily family = CodeFamily::surface;
    std::vector<int> sizes;
    NoiseModel channel;
    std::vector<double> rates;
    DecoderKind decoder = DecoderKind::mwpm;
    long shots = 1000;
    uint64_t seed = 0;
    int workers = 1;
    std::string out;
    bool timing = false;  // off keeps the CSV byte-identical across runs
    int truncation = 20;
};

struct ResultRow {
    int d = 0;
    double p = 0;
    long shots = 0;
    long failures = 0;
    double rate = 0;
    double lo95 = 0;
    double hi95 = 0;
    double ns_per_shot = 0;
};

struct WilsonInterval {
    double lo = 0;
    double hi = 0;
};

// 95% Wilson score interval; well behaved at zero failures.
WilsonInterval wilson_interval(long failures, long shots);

uint64_t point_seed(uint64_t master, int d, double p);

StabilizerCode build_code(CodeFamily family, int size);

// Monte Carlo estimate of the logical failure rate at one (code, rate) point.
// Every shot asserts the defect-parity conservation laws matched to the
// channel; a violation aborts the run. Deterministic in (seed, shots)
// regardless of worker count.
ResultRow run_point(const StabilizerCode& code, const NoiseModel& channel,
                    DecoderKind decoder, long shots, uint64_t seed, int workers = 1,
                    bool timing = false, int truncation = 20);

// Cartesian product of sizes x rates; rows stream to `csv` as they complete.
std::vector<ResultRow> run_sweep(const ExperimentConfig& config, std::ostream* csv);

std::string csv_header();
void write_csv_row(std::ostream& out, const ResultRow& row);

struct CrossingEstimate {
    int d_small = 0;
    int d_large = 0;
    double p = 0;
    bool found = false;     // false: "none in range"
    bool resolved = false;  // intervals separate on both sides of the crossing
    bool monotonicity_warning = false;  // a curve decreases in p beyond noise
};

// Pairwise curve crossings between adjacent code sizes, by linear
// interpolation in p.
std::vector<CrossingEstimate> find_crossing(const std::vector<ResultRow>& rows);

// Conservation-law audit set matched to a (code, channel) pair.
std::vector<Symmetry> audit_symmetries(const StabilizerCode& code, const NoiseModel& channel);

}  // namespace symdec
