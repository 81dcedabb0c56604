#pragma once

#include <map>
#include <vector>

#include "symdec/detector.hpp"

namespace symdec {

// Complete weighted graph over the detection events of one decoding problem,
// with an optional boundary that any number of events may be matched into.
struct DecodingGraph {
    int num_events = 0;
    std::vector<double> pair_weight;      // dense num_events x num_events
    bool has_boundary = false;
    std::vector<double> boundary_weight;  // per event

    // Path reconstruction context (absent for hand-built oracle graphs).
    const DetectorGraph* detector = nullptr;
    std::vector<int> event_nodes;
    std::vector<PathTree> trees;

    double weight(int a, int b) const {
        return pair_weight[static_cast<size_t>(a) * static_cast<size_t>(num_events) +
                           static_cast<size_t>(b)];
    }
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // event-event, first < second, sorted
    std::vector<int> boundary_matched;       // events paired to the boundary, sorted
    double total_weight = 0;                 // canonical summation order
};

// Complete graph over the events with shortest-path weights. With truncation
// K > 0 and more than 40 events, only the K nearest neighbours of each event
// get finite edges (the oracle suite always runs full). Throws on odd event
// parity without a boundary.
DecodingGraph build_matching_graph(const DetectorGraph& detector,
                                   const DetectionEvents& events, int truncation = 0);

// Exact minimum-weight perfect matching over events plus boundary. The
// boundary can absorb any subset of events (zero-cost boundary self-pairing).
Matching mwpm(const DecodingGraph& graph);

struct CorrectionOutcome {
    PauliString correction;
    std::map<int, int> boundary_counts;  // boundary segment tag -> matched edges
    Matching matching;
};

// Walks each matched pair's shortest path and multiplies the data payloads;
// measurement-flip payloads need no physical fix and are skipped.
CorrectionOutcome correction_from_matching(const DecodingGraph& graph,
                                           const Matching& matching);

// Parity of matched edges that terminate on the given boundary segment.
int commutator_via_boundary(const CorrectionOutcome& outcome, int boundary_tag);

enum class DecoderKind { mwpm, unionfind };

struct DecodeOptions {
    DecoderKind decoder = DecoderKind::mwpm;
    int truncation = 20;
};

// Full decoding pipeline for one (code, channel) pair: the code's symmetry
// sectors are built once, each shot matches (or union-find peels) per sector
// and multiplies the sector corrections.
class Decoder {
  public:
    Decoder(const StabilizerCode& code, const NoiseModel& channel,
            DecodeOptions options = {});

    PauliString decode(const DetectionEvents& events) const;

    // Per-sector outcomes of the last explicit call; mwpm only.
    std::vector<CorrectionOutcome> decode_detailed(const DetectionEvents& events) const;

    const std::vector<DetectorGraph>& sectors() const { return sectors_; }
    const std::vector<Symmetry>& sector_symmetries() const { return sector_symmetries_; }

  private:
    PauliString decode_impl(const DetectionEvents& events,
                            std::vector<CorrectionOutcome>* detailed) const;

    const StabilizerCode* code_;
    NoiseModel channel_;
    DecodeOptions options_;
    std::vector<Symmetry> sector_symmetries_;
    std::vector<DetectorGraph> sectors_;
    std::vector<int> generator_sector_;  // generator -> sector or -1
};

// One-shot convenience wrapper around Decoder.
PauliString decode(const StabilizerCode& code, const NoiseModel& channel,
                   const DetectionEvents& events, DecodeOptions options = {});

}  // namespace symdec
