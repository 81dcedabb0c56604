#pragma once

#include <vector>

#include "symdec/detector.hpp"

namespace symdec {

// Cluster-growth state of the union-find decoder. Growth is unweighted: every
// unit edge has length two and grows by half-edges. A cluster freezes when
// its defect parity is even or it has absorbed a boundary edge.
struct ClusterState {
    const DetectorGraph* detector = nullptr;
    std::vector<int> parent;        // disjoint-set forest over detector nodes
    std::vector<int> tree_rank;
    std::vector<int> cluster_size;  // valid at roots
    std::vector<int> parity;        // defect parity, valid at roots
    std::vector<char> touches_boundary;  // valid at roots
    std::vector<std::vector<int>> frontier;  // half-grown edge set, valid at roots
    std::vector<int> edge_growth;            // per edge: 0, 1, 2 (2 = fully grown)
    std::vector<char> is_defect;             // per node

    int find(int v);
    bool frozen(int root) const {
        return parity[static_cast<size_t>(root)] % 2 == 0 ||
               touches_boundary[static_cast<size_t>(root)];
    }
};

// Grows all unfrozen clusters by half-edges, smallest cluster first, merging
// on completed edges, until every cluster is frozen.
ClusterState grow_clusters(const DetectorGraph& detector, const DetectionEvents& events);

// Peels a spanning forest of each cluster leaf-inward, emitting the payload
// of every edge that carries a defect outward. The result clears the
// syndrome within every cluster.
PauliString peel(ClusterState& state);

PauliString unionfind_decode(const DetectorGraph& detector, const DetectionEvents& events);

}  // namespace symdec
