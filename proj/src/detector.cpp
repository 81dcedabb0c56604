#include "symdec/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace symdec {

namespace {

double edge_weight(double p) {
    if (p <= 0 || p >= 0.5) {
        throw std::invalid_argument("edge weights need event probability in (0, 1/2)");
    }
    return -std::log(p / (1.0 - p));
}

int find_boundary_tag(const StabilizerCode& code, const PauliString& payload) {
    bool x_chain = payload.z_bits().is_zero();
    bool z_chain = payload.x_bits().is_zero();
    for (size_t s = 0; s < code.boundaries.size(); s++) {
        const BoundarySegment& seg = code.boundaries[s];
        if (seg.kind == BoundaryKind::periodic) continue;
        if (x_chain && seg.kind != BoundaryKind::x_type) continue;
        if (z_chain && !x_chain && seg.kind != BoundaryKind::z_type) continue;
        for (size_t q : seg.qubits) {
            if (payload.at(q) != Pauli::I) {
                return static_cast<int>(s);
            }
        }
    }
    return -1;
}

}  // namespace

int DetectorGraph::node_id(size_t generator, int round) const {
    auto it = std::lower_bound(member_generators.begin(), member_generators.end(), generator);
    if (it == member_generators.end() || *it != generator) return -1;
    if (round < 0 || round >= rounds) return -1;
    size_t slot = static_cast<size_t>(it - member_generators.begin());
    return static_cast<int>(slot * static_cast<size_t>(rounds)) + round;
}

std::vector<Mechanism> enumerate_mechanisms(const StabilizerCode& code,
                                            const NoiseModel& channel) {
    std::vector<Mechanism> out;
    int rounds = channel.kind == NoiseKind::phenomenological ? channel.rounds : 1;

    if (channel.kind == NoiseKind::ballistic) {
        for (PauliString& s : ballistic_string_set(channel, code)) {
            Mechanism m;
            m.pauli = std::move(s);
            m.probability = channel.p_string;
            out.push_back(std::move(m));
        }
        return out;
    }

    double x_marg = channel.x_marginal();
    double z_marg = channel.z_marginal();
    for (int t = 0; t < rounds; t++) {
        for (size_t q = 0; q < code.n; q++) {
            double px = x_marg;
            double pz = z_marg;
            if (px > 0) {
                Mechanism m;
                m.pauli = PauliString::single(code.n, q, Pauli::X);
                m.round = t;
                m.probability = px;
                out.push_back(std::move(m));
            }
            if (pz > 0) {
                Mechanism m;
                m.pauli = PauliString::single(code.n, q, Pauli::Z);
                m.round = t;
                m.probability = pz;
                out.push_back(std::move(m));
            }
        }
    }
    if (channel.kind == NoiseKind::phenomenological) {
        double q_flip = channel.measurement_flip_rate();
        if (q_flip > 0) {
            for (int t = 0; t + 1 < rounds; t++) {
                for (size_t g = 0; g < code.generators.size(); g++) {
                    Mechanism m;
                    m.pauli = PauliString(code.n);
                    m.flip_generator = static_cast<int>(g);
                    m.flip_round = t;
                    m.probability = q_flip;
                    out.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

DetectorGraph build_detector_graph(const StabilizerCode& code, const NoiseModel& channel,
                                   const Symmetry& sigma) {
    DetectorGraph graph;
    graph.code = &code;
    graph.rounds = channel.kind == NoiseKind::phenomenological ? channel.rounds : 1;

    for (const StabRef& m : sigma.members) {
        if (!m.is_aux()) {
            graph.member_generators.push_back(static_cast<size_t>(m.generator_index));
        }
    }
    std::sort(graph.member_generators.begin(), graph.member_generators.end());
    graph.member_generators.erase(
        std::unique(graph.member_generators.begin(), graph.member_generators.end()),
        graph.member_generators.end());

    graph.nodes.reserve(graph.member_generators.size() * static_cast<size_t>(graph.rounds));
    for (size_t g : graph.member_generators) {
        for (int t = 0; t < graph.rounds; t++) {
            graph.nodes.push_back({g, t});
        }
    }

    graph.mechanisms = enumerate_mechanisms(code, channel);

    // Merged parallel edges: keep the most probable mechanism per node pair.
    std::map<std::pair<int, int>, int> edge_of_pair;  // (u, v) with v = -1 for boundary

    for (size_t mi = 0; mi < graph.mechanisms.size(); mi++) {
        Mechanism& mech = graph.mechanisms[mi];
        if (mech.probability <= 0) continue;
        std::vector<int> hit_nodes;
        if (mech.is_flip()) {
            int u = graph.node_id(static_cast<size_t>(mech.flip_generator), mech.flip_round);
            int v = graph.node_id(static_cast<size_t>(mech.flip_generator), mech.flip_round + 1);
            if (u < 0 && v < 0) continue;
            if (u >= 0) hit_nodes.push_back(u);
            if (v >= 0) hit_nodes.push_back(v);
        } else {
            for (size_t g : graph.member_generators) {
                if (anticommutes(mech.pauli, code.generators[g])) {
                    int id = graph.node_id(g, mech.round);
                    if (id >= 0) hit_nodes.push_back(id);
                }
            }
        }
        if (hit_nodes.empty()) continue;
        if (hit_nodes.size() > 2) {
            throw std::invalid_argument("not matchable under this symmetry: an elementary "
                                        "fault flips more than two members");
        }

        DetectorEdge edge;
        edge.mechanism = mi;
        edge.weight = edge_weight(mech.probability);
        if (hit_nodes.size() == 2) {
            edge.u = std::min(hit_nodes[0], hit_nodes[1]);
            edge.v = std::max(hit_nodes[0], hit_nodes[1]);
        } else {
            edge.u = hit_nodes[0];
            edge.v = -1;
            if (!mech.is_flip()) {
                mech.boundary_tag = find_boundary_tag(code, mech.pauli);
            }
            edge.boundary_tag = mech.boundary_tag;
            graph.has_boundary = true;
        }

        auto key = std::make_pair(edge.u, edge.v);
        auto it = edge_of_pair.find(key);
        if (it == edge_of_pair.end()) {
            edge_of_pair[key] = static_cast<int>(graph.edges.size());
            graph.edges.push_back(edge);
        } else if (edge.weight < graph.edges[static_cast<size_t>(it->second)].weight) {
            graph.edges[static_cast<size_t>(it->second)] = edge;
        }
    }

    graph.adjacency.assign(graph.nodes.size(), {});
    graph.boundary_edges.assign(graph.nodes.size(), {});
    for (size_t e = 0; e < graph.edges.size(); e++) {
        const DetectorEdge& edge = graph.edges[e];
        if (edge.v >= 0) {
            graph.adjacency[static_cast<size_t>(edge.u)].push_back(static_cast<int>(e));
            graph.adjacency[static_cast<size_t>(edge.v)].push_back(static_cast<int>(e));
        } else {
            graph.boundary_edges[static_cast<size_t>(edge.u)].push_back(static_cast<int>(e));
        }
    }
    return graph;
}

PathTree shortest_paths(const DetectorGraph& graph, int source) {
    size_t n = graph.nodes.size();
    PathTree tree;
    tree.dist.assign(n, std::numeric_limits<double>::infinity());
    tree.parent_edge.assign(n, -1);
    tree.boundary_dist = std::numeric_limits<double>::infinity();

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    tree.dist[static_cast<size_t>(source)] = 0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > tree.dist[static_cast<size_t>(u)]) continue;
        for (int e : graph.adjacency[static_cast<size_t>(u)]) {
            const DetectorEdge& edge = graph.edges[static_cast<size_t>(e)];
            int v = edge.u == u ? edge.v : edge.u;
            double nd = d + edge.weight;
            if (nd < tree.dist[static_cast<size_t>(v)]) {
                tree.dist[static_cast<size_t>(v)] = nd;
                tree.parent_edge[static_cast<size_t>(v)] = e;
                heap.emplace(nd, v);
            }
        }
    }
    for (size_t u = 0; u < n; u++) {
        if (std::isinf(tree.dist[u])) continue;
        for (int e : graph.boundary_edges[u]) {
            double nd = tree.dist[u] + graph.edges[static_cast<size_t>(e)].weight;
            if (nd < tree.boundary_dist) {
                tree.boundary_dist = nd;
                tree.boundary_node = static_cast<int>(u);
                tree.boundary_edge = e;
            }
        }
    }
    return tree;
}

}  // namespace symdec
