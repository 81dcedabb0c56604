#pragma once

#include <utility>
#include <vector>

#include "symdec/code.hpp"
#include "symdec/noise.hpp"

namespace symdec {

// Generator indices that measured -1. Sorted, duplicate-free.
struct Syndrome {
    std::vector<size_t> defects;

    bool empty() const { return defects.empty(); }
    bool has(size_t g) const;
};

// Space-time detection events: XOR of consecutive measurement rounds of one
// generator, with round 0 compared against the all-clear reference.
struct DetectionEvents {
    std::vector<std::pair<size_t, int>> events;  // (generator, round), sorted
    int rounds = 1;

    bool empty() const { return events.empty(); }
};

Syndrome extract_syndrome(const StabilizerCode& code, const PauliString& error);

DetectionEvents detection_events(const StabilizerCode& code, const ErrorSample& sample);

// Single-round wrapper: turns a plain syndrome into one round of events.
DetectionEvents events_from_syndrome(const Syndrome& syndrome);

}  // namespace symdec
