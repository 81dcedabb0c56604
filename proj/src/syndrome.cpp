#include "symdec/syndrome.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdec {

bool Syndrome::has(size_t g) const {
    return std::binary_search(defects.begin(), defects.end(), g);
}

Syndrome extract_syndrome(const StabilizerCode& code, const PauliString& error) {
    if (error.num_qubits() != code.n) {
        throw std::invalid_argument("error qubit count does not match code");
    }
    Syndrome out;
    for (size_t g = 0; g < code.generators.size(); g++) {
        if (anticommutes(error, code.generators[g])) {
            out.defects.push_back(g);
        }
    }
    return out;
}

DetectionEvents detection_events(const StabilizerCode& code, const ErrorSample& sample) {
    if (sample.cumulative.empty()) {
        throw std::invalid_argument("sample has no rounds");
    }
    int rounds = sample.rounds();
    size_t m = code.generators.size();

    // raw[t][g] = measured outcome flip at round t
    std::vector<std::vector<bool>> raw(static_cast<size_t>(rounds),
                                       std::vector<bool>(m, false));
    for (int t = 0; t < rounds; t++) {
        Syndrome s = extract_syndrome(code, sample.cumulative[static_cast<size_t>(t)]);
        for (size_t g : s.defects) {
            raw[static_cast<size_t>(t)][g] = true;
        }
    }
    for (const auto& [g, t] : sample.measurement_flips) {
        if (g >= m || t < 0 || t >= rounds) {
            throw std::invalid_argument("measurement flip outside sample range");
        }
        raw[static_cast<size_t>(t)][g] = !raw[static_cast<size_t>(t)][g];
    }

    DetectionEvents out;
    out.rounds = rounds;
    for (int t = 0; t < rounds; t++) {
        for (size_t g = 0; g < m; g++) {
            bool previous = t > 0 && raw[static_cast<size_t>(t - 1)][g];
            if (raw[static_cast<size_t>(t)][g] != previous) {
                out.events.emplace_back(g, t);
            }
        }
    }
    std::sort(out.events.begin(), out.events.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second : a.first < b.first;
              });
    return out;
}

DetectionEvents events_from_syndrome(const Syndrome& syndrome) {
    DetectionEvents out;
    out.rounds = 1;
    for (size_t g : syndrome.defects) {
        out.events.emplace_back(g, 0);
    }
    return out;
}

}  // namespace symdec
