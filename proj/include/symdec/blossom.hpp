#pragma once

#include <tuple>
#include <vector>

namespace symdec {

using WeightedEdge = std::tuple<int, int, double>;

// Maximum-weight matching on a general graph via the primal-dual blossom
// method (Edmonds; Galil's exposition). Returns mate[v] = partner vertex or
// -1. With max_cardinality set, the result has maximum cardinality and, among
// those, maximum weight; negative weights are handled.
std::vector<int> max_weight_matching(int num_vertices,
                                     const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

// Minimum-weight perfect matching (weights negated, maximum cardinality
// forced). Throws std::runtime_error if the graph admits no perfect matching.
std::vector<int> min_weight_perfect_matching(int num_vertices,
                                             const std::vector<WeightedEdge>& edges);

}  // namespace symdec
