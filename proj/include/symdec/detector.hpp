#pragma once

#include <map>
#include <vector>

#include "symdec/code.hpp"
#include "symdec/noise.hpp"
#include "symdec/symmetry.hpp"
#include "symdec/syndrome.hpp"

namespace symdec {

// One elementary fault the channel can produce: a data Pauli chain landing in
// a given round, or a single measurement flip.
struct Mechanism {
    PauliString pauli;        // data payload; identity for measurement flips
    int round = 0;
    int flip_generator = -1;  // >= 0 marks a measurement-flip mechanism
    int flip_round = -1;
    double probability = 0;
    int boundary_tag = -1;    // boundary segment index for single-defect faults

    bool is_flip() const { return flip_generator >= 0; }
};

struct DetectorNode {
    size_t generator = 0;
    int round = 0;
};

struct DetectorEdge {
    int u = -1;  // node ids; v = -1 denotes the boundary
    int v = -1;
    double weight = 0;
    size_t mechanism = 0;
    int boundary_tag = -1;
};

// Space-time graph whose nodes are the (generator, round) sites of one
// symmetry's members and whose unit edges are the channel's elementary
// faults, weighted -log(pi/(1-pi)). Built once per decoding problem and
// shared read-only across shots.
struct DetectorGraph {
    const StabilizerCode* code = nullptr;
    int rounds = 1;
    std::vector<size_t> member_generators;  // sorted, distinct
    std::vector<DetectorNode> nodes;
    std::vector<DetectorEdge> edges;
    std::vector<Mechanism> mechanisms;
    std::vector<std::vector<int>> adjacency;       // node -> internal edge ids
    std::vector<std::vector<int>> boundary_edges;  // node -> boundary edge ids
    bool has_boundary = false;

    int node_id(size_t generator, int round) const;
};

std::vector<Mechanism> enumerate_mechanisms(const StabilizerCode& code,
                                            const NoiseModel& channel);

// Throws std::invalid_argument when an elementary fault flips three or more
// members ("not matchable under this symmetry").
DetectorGraph build_detector_graph(const StabilizerCode& code, const NoiseModel& channel,
                                   const Symmetry& sigma);

// Single-source shortest paths over the unit-edge graph. Boundary reached
// only through explicit boundary edges; interior paths never cross it.
struct PathTree {
    std::vector<double> dist;
    std::vector<int> parent_edge;  // internal edge used to reach each node
    double boundary_dist = 0;
    int boundary_node = -1;  // node from which the boundary edge leaves
    int boundary_edge = -1;
};

PathTree shortest_paths(const DetectorGraph& graph, int source);

}  // namespace symdec
