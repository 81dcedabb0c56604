#include "symdec/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "symdec/blossom.hpp"
#include "symdec/codes.hpp"
#include "symdec/unionfind.hpp"

namespace symdec {

DecodingGraph build_matching_graph(const DetectorGraph& detector,
                                   const DetectionEvents& events, int truncation) {
    DecodingGraph graph;
    graph.detector = &detector;
    graph.has_boundary = detector.has_boundary;
    graph.num_events = static_cast<int>(events.events.size());
    for (const auto& [g, t] : events.events) {
        int node = detector.node_id(g, t);
        if (node < 0) {
            throw std::invalid_argument("detection event outside the detector graph");
        }
        graph.event_nodes.push_back(node);
    }
    if (!graph.has_boundary && graph.num_events % 2 != 0) {
        throw std::logic_error("parity violation: odd defect count with no boundary");
    }

    int m = graph.num_events;
    graph.pair_weight.assign(static_cast<size_t>(m) * static_cast<size_t>(m),
                             std::numeric_limits<double>::infinity());
    graph.boundary_weight.assign(static_cast<size_t>(m),
                                 std::numeric_limits<double>::infinity());
    graph.trees.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; i++) {
        graph.trees.push_back(shortest_paths(detector, graph.event_nodes[static_cast<size_t>(i)]));
    }
    for (int i = 0; i < m; i++) {
        const PathTree& tree = graph.trees[static_cast<size_t>(i)];
        for (int j = 0; j < m; j++) {
            if (j != i) {
                graph.pair_weight[static_cast<size_t>(i) * static_cast<size_t>(m) +
                                  static_cast<size_t>(j)] =
                    tree.dist[static_cast<size_t>(graph.event_nodes[static_cast<size_t>(j)])];
            }
        }
        graph.boundary_weight[static_cast<size_t>(i)] = tree.boundary_dist;
    }

    // Performance truncation: keep only the K nearest neighbours per event.
    if (truncation > 0 && m > 40) {
        std::vector<double> truncated(static_cast<size_t>(m) * static_cast<size_t>(m),
                                      std::numeric_limits<double>::infinity());
        std::vector<int> order(static_cast<size_t>(m));
        for (int i = 0; i < m; i++) {
            for (int j = 0; j < m; j++) order[static_cast<size_t>(j)] = j;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                double wa = graph.weight(i, a), wb = graph.weight(i, b);
                return wa != wb ? wa < wb : a < b;
            });
            int kept = 0;
            for (int j : order) {
                if (j == i || std::isinf(graph.weight(i, j))) continue;
                truncated[static_cast<size_t>(i) * static_cast<size_t>(m) +
                          static_cast<size_t>(j)] = graph.weight(i, j);
                truncated[static_cast<size_t>(j) * static_cast<size_t>(m) +
                          static_cast<size_t>(i)] = graph.weight(i, j);
                if (++kept >= truncation) break;
            }
        }
        graph.pair_weight = std::move(truncated);
    }
    return graph;
}

Matching mwpm(const DecodingGraph& graph) {
    Matching result;
    int m = graph.num_events;
    if (m == 0) return result;

    // Boundary handling: one mirror vertex per event; mirrors pair among
    // themselves at zero cost, so the boundary absorbs any subset of events.
    int total = graph.has_boundary ? 2 * m : m;
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < m; i++) {
        for (int j = i + 1; j < m; j++) {
            double w = graph.weight(i, j);
            if (std::isfinite(w)) edges.emplace_back(i, j, w);
        }
    }
    if (graph.has_boundary) {
        for (int i = 0; i < m; i++) {
            double w = graph.boundary_weight[static_cast<size_t>(i)];
            if (std::isfinite(w)) edges.emplace_back(i, m + i, w);
        }
        for (int i = 0; i < m; i++) {
            for (int j = i + 1; j < m; j++) {
                edges.emplace_back(m + i, m + j, 0.0);
            }
        }
    }
    if (total % 2 != 0) {
        throw std::logic_error("parity violation: odd vertex count in matching graph");
    }

    std::vector<int> mate = min_weight_perfect_matching(total, edges);
    for (int i = 0; i < m; i++) {
        int p = mate[static_cast<size_t>(i)];
        if (p >= m) {
            result.boundary_matched.push_back(i);
        } else if (p > i) {
            result.pairs.emplace_back(i, p);
        }
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    std::sort(result.boundary_matched.begin(), result.boundary_matched.end());
    result.total_weight = 0;
    for (const auto& [i, j] : result.pairs) {
        result.total_weight += graph.weight(i, j);
    }
    for (int i : result.boundary_matched) {
        result.total_weight += graph.boundary_weight[static_cast<size_t>(i)];
    }
    return result;
}

CorrectionOutcome correction_from_matching(const DecodingGraph& graph,
                                           const Matching& matching) {
    if (graph.detector == nullptr) {
        throw std::invalid_argument("graph carries no detector context");
    }
    const DetectorGraph& detector = *graph.detector;
    CorrectionOutcome out;
    out.matching = matching;
    out.correction = PauliString(detector.code->n);

    auto walk = [&](int source_event, int target_node) {
        const PathTree& tree = graph.trees[static_cast<size_t>(source_event)];
        int node = target_node;
        int source_node = graph.event_nodes[static_cast<size_t>(source_event)];
        while (node != source_node) {
            int e = tree.parent_edge[static_cast<size_t>(node)];
            if (e < 0) {
                throw std::logic_error("matched pair not connected in detector graph");
            }
            const DetectorEdge& edge = detector.edges[static_cast<size_t>(e)];
            const Mechanism& mech = detector.mechanisms[edge.mechanism];
            if (!mech.is_flip()) {
                out.correction.multiply_inplace(mech.pauli);
            }
            node = edge.u == node ? edge.v : edge.u;
        }
    };

    for (const auto& [i, j] : matching.pairs) {
        walk(i, graph.event_nodes[static_cast<size_t>(j)]);
    }
    for (int i : matching.boundary_matched) {
        const PathTree& tree = graph.trees[static_cast<size_t>(i)];
        if (tree.boundary_edge < 0) {
            throw std::logic_error("boundary match without boundary path");
        }
        walk(i, tree.boundary_node);
        const DetectorEdge& edge = detector.edges[static_cast<size_t>(tree.boundary_edge)];
        const Mechanism& mech = detector.mechanisms[edge.mechanism];
        if (!mech.is_flip()) {
            out.correction.multiply_inplace(mech.pauli);
        }
        out.boundary_counts[edge.boundary_tag]++;
    }
    return out;
}

int commutator_via_boundary(const CorrectionOutcome& outcome, int boundary_tag) {
    auto it = outcome.boundary_counts.find(boundary_tag);
    if (it == outcome.boundary_counts.end()) return 0;
    return it->second & 1;
}

Decoder::Decoder(const StabilizerCode& code, const NoiseModel& channel,
                 DecodeOptions options)
    : code_(&code), channel_(channel), options_(options) {
    channel.validate();

    bool flips = channel.kind == NoiseKind::phenomenological &&
                 channel.measurement_flip_rate() > 0;
    if (code.family == CodeFamily::xzzx && channel.is_pure_z()) {
        // Pure dephasing: one independent cyclic repetition problem per row
        // symmetry.
        sector_symmetries_ = xzzx_row_symmetries(code);
    } else if (channel.kind == NoiseKind::ballistic) {
        // Column classes partition the Z faces; every string stays inside one.
        int xi = channel.xi;
        std::vector<Symmetry> all = ballistic_symmetries(code, xi);
        size_t keep = xi == 1 ? 1 : static_cast<size_t>(xi);
        sector_symmetries_.assign(all.begin(), all.begin() + static_cast<ptrdiff_t>(keep));
    } else if (code.is_css()) {
        bool want_z = !code.z_type.empty() && (channel.x_marginal() > 0 || flips);
        bool want_x = !code.x_type.empty() && (channel.z_marginal() > 0 || flips);
        if (want_z) sector_symmetries_.push_back(css_sector_symmetry(code, true));
        if (want_x) sector_symmetries_.push_back(css_sector_symmetry(code, false));
    } else {
        // Non-CSS codes (XZZX under finite bias): every single-qubit X or Z
        // flips at most two faces, so the full generator set is matchable as
        // one sector.
        if (channel.x_marginal() > 0 || channel.z_marginal() > 0 || flips) {
            sector_symmetries_.push_back(full_symmetry(code));
        }
    }

    for (const Symmetry& sigma : sector_symmetries_) {
        sectors_.push_back(build_detector_graph(code, channel_, sigma));
    }
    generator_sector_.assign(code.generators.size(), -1);
    for (size_t s = 0; s < sectors_.size(); s++) {
        for (size_t g : sectors_[s].member_generators) {
            generator_sector_[g] = static_cast<int>(s);
        }
    }
}

PauliString Decoder::decode_impl(const DetectionEvents& events,
                                 std::vector<CorrectionOutcome>* detailed) const {
    size_t n = code_->n;
    std::vector<DetectionEvents> per_sector(sectors_.size());
    for (auto& ev : per_sector) ev.rounds = events.rounds;
    for (const auto& [g, t] : events.events) {
        if (g >= generator_sector_.size() || generator_sector_[g] < 0) {
            throw std::invalid_argument("detection event on a generator outside all sectors");
        }
        per_sector[static_cast<size_t>(generator_sector_[g])].events.emplace_back(g, t);
    }

    PauliString correction(n);
    for (size_t s = 0; s < sectors_.size(); s++) {
        if (per_sector[s].events.empty()) continue;
        if (options_.decoder == DecoderKind::unionfind) {
            correction.multiply_inplace(unionfind_decode(sectors_[s], per_sector[s]));
        } else {
            DecodingGraph graph =
                build_matching_graph(sectors_[s], per_sector[s], options_.truncation);
            Matching matching;
            try {
                matching = mwpm(graph);
            } catch (const std::runtime_error&) {
                // Truncation can disconnect a boundary-free problem; the full
                // graph is always feasible.
                graph = build_matching_graph(sectors_[s], per_sector[s], 0);
                matching = mwpm(graph);
            }
            CorrectionOutcome outcome = correction_from_matching(graph, matching);
            correction.multiply_inplace(outcome.correction);
            if (detailed != nullptr) detailed->push_back(std::move(outcome));
        }
    }
    return correction;
}

PauliString Decoder::decode(const DetectionEvents& events) const {
    return decode_impl(events, nullptr);
}

std::vector<CorrectionOutcome> Decoder::decode_detailed(const DetectionEvents& events) const {
    std::vector<CorrectionOutcome> detailed;
    decode_impl(events, &detailed);
    return detailed;
}

PauliString decode(const StabilizerCode& code, const NoiseModel& channel,
                   const DetectionEvents& events, DecodeOptions options) {
    return Decoder(code, channel, options).decode(events);
}

}  // namespace symdec
