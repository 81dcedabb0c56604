#include "symdec/unionfind.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdec {

int ClusterState::find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
    }
    return v;
}

namespace {

// Union by rank; size, parity, boundary flag and frontier list merge into the
// surviving root (smaller frontier spliced into the larger).
void merge(ClusterState& state, int a, int b) {
    a = state.find(a);
    b = state.find(b);
    if (a == b) return;
    if (state.tree_rank[static_cast<size_t>(a)] < state.tree_rank[static_cast<size_t>(b)]) {
        std::swap(a, b);
    }
    state.parent[static_cast<size_t>(b)] = a;
    if (state.tree_rank[static_cast<size_t>(a)] == state.tree_rank[static_cast<size_t>(b)]) {
        state.tree_rank[static_cast<size_t>(a)]++;
    }
    state.cluster_size[static_cast<size_t>(a)] += state.cluster_size[static_cast<size_t>(b)];
    state.parity[static_cast<size_t>(a)] += state.parity[static_cast<size_t>(b)];
    state.touches_boundary[static_cast<size_t>(a)] =
        state.touches_boundary[static_cast<size_t>(a)] ||
        state.touches_boundary[static_cast<size_t>(b)];
    std::vector<int>& fa = state.frontier[static_cast<size_t>(a)];
    std::vector<int>& fb = state.frontier[static_cast<size_t>(b)];
    if (fa.size() < fb.size()) std::swap(fa, fb);
    fa.insert(fa.end(), fb.begin(), fb.end());
    fb.clear();
    fb.shrink_to_fit();
}

}  // namespace

ClusterState grow_clusters(const DetectorGraph& detector, const DetectionEvents& events) {
    ClusterState state;
    state.detector = &detector;
    size_t n = detector.nodes.size();
    state.parent.resize(n);
    for (size_t v = 0; v < n; v++) state.parent[v] = static_cast<int>(v);
    state.tree_rank.assign(n, 0);
    state.cluster_size.assign(n, 1);
    state.parity.assign(n, 0);
    state.touches_boundary.assign(n, 0);
    state.frontier.assign(n, {});
    for (size_t v = 0; v < n; v++) {
        state.frontier[v].insert(state.frontier[v].end(), detector.adjacency[v].begin(),
                                 detector.adjacency[v].end());
        state.frontier[v].insert(state.frontier[v].end(), detector.boundary_edges[v].begin(),
                                 detector.boundary_edges[v].end());
    }
    state.edge_growth.assign(detector.edges.size(), 0);
    state.is_defect.assign(n, 0);

    for (const auto& [g, t] : events.events) {
        int node = detector.node_id(g, t);
        if (node < 0) {
            throw std::invalid_argument("detection event outside the detector graph");
        }
        state.is_defect[static_cast<size_t>(node)] = 1;
        state.parity[static_cast<size_t>(node)] = 1;
    }

    std::vector<int> active;
    for (const auto& [g, t] : events.events) {
        int root = state.find(detector.node_id(g, t));
        if (!state.frozen(root)) active.push_back(root);
    }
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());

    while (!active.empty()) {
        // Smallest cluster first, then lowest root, for determinism.
        std::sort(active.begin(), active.end(), [&](int a, int b) {
            int sa = state.cluster_size[static_cast<size_t>(a)];
            int sb = state.cluster_size[static_cast<size_t>(b)];
            return sa != sb ? sa < sb : a < b;
        });
        std::vector<int> next_active;
        for (int root : active) {
            if (state.find(root) != root || state.frozen(root)) continue;
            // Grow every frontier edge of this cluster by half an edge,
            // dropping edges that became internal or fully grown.
            std::vector<int> scan = std::move(state.frontier[static_cast<size_t>(root)]);
            std::vector<int>& keep = state.frontier[static_cast<size_t>(root)];
            keep.clear();
            std::vector<int> completed;
            for (int e : scan) {
                if (state.edge_growth[static_cast<size_t>(e)] >= 2) continue;
                const DetectorEdge& edge = detector.edges[static_cast<size_t>(e)];
                if (edge.v >= 0 && state.find(edge.u) == state.find(edge.v)) continue;
                state.edge_growth[static_cast<size_t>(e)]++;
                if (state.edge_growth[static_cast<size_t>(e)] >= 2) {
                    completed.push_back(e);
                } else {
                    keep.push_back(e);
                }
            }
            for (int e : completed) {
                const DetectorEdge& edge = detector.edges[static_cast<size_t>(e)];
                if (edge.v >= 0) {
                    merge(state, edge.u, edge.v);
                } else {
                    state.touches_boundary[static_cast<size_t>(state.find(edge.u))] = 1;
                }
            }
            int new_root = state.find(root);
            if (!state.frozen(new_root)) {
                if (state.frontier[static_cast<size_t>(new_root)].empty()) {
                    // An odd cluster that swallowed its whole component can
                    // only come from a conservation-law breach upstream.
                    throw std::logic_error("unfreezable cluster exhausted its component");
                }
                next_active.push_back(new_root);
            }
        }
        std::sort(next_active.begin(), next_active.end());
        next_active.erase(std::unique(next_active.begin(), next_active.end()),
                          next_active.end());
        active = std::move(next_active);
    }
    return state;
}

PauliString peel(ClusterState& state) {
    const DetectorGraph& detector = *state.detector;
    size_t n = detector.nodes.size();
    PauliString correction(detector.code->n);

    // Grown boundary exit per cluster root (lowest edge id wins).
    std::vector<int> boundary_exit(n, -1);
    for (size_t e = 0; e < detector.edges.size(); e++) {
        const DetectorEdge& edge = detector.edges[e];
        if (edge.v >= 0 || state.edge_growth[e] < 2) continue;
        int root = state.find(edge.u);
        if (boundary_exit[static_cast<size_t>(root)] < 0) {
            boundary_exit[static_cast<size_t>(root)] = static_cast<int>(e);
        }
    }

    // Adjacency over fully grown internal edges.
    std::vector<std::vector<int>> grown(n);
    for (size_t e = 0; e < detector.edges.size(); e++) {
        const DetectorEdge& edge = detector.edges[e];
        if (edge.v < 0 || state.edge_growth[e] < 2) continue;
        grown[static_cast<size_t>(edge.u)].push_back(static_cast<int>(e));
        grown[static_cast<size_t>(edge.v)].push_back(static_cast<int>(e));
    }

    std::vector<char> visited(n, 0);
    std::vector<char> defect(state.is_defect.begin(), state.is_defect.end());
    for (size_t start = 0; start < n; start++) {
        int root = state.find(static_cast<int>(start));
        if (visited[static_cast<size_t>(root)]) continue;

        // Root the spanning tree at the boundary exit when the cluster has
        // one, so residual defects drain into the boundary.
        int tree_root = root;
        int exit_edge = boundary_exit[static_cast<size_t>(root)];
        if (exit_edge >= 0) {
            tree_root = detector.edges[static_cast<size_t>(exit_edge)].u;
        } else {
            for (size_t v = 0; v < n; v++) {
                if (state.find(static_cast<int>(v)) == root) {
                    tree_root = static_cast<int>(v);
                    break;
                }
            }
        }
        if (visited[static_cast<size_t>(tree_root)]) continue;

        // BFS spanning tree.
        std::vector<int> order;
        std::vector<int> parent_edge(n, -1);
        visited[static_cast<size_t>(tree_root)] = 1;
        order.push_back(tree_root);
        for (size_t head = 0; head < order.size(); head++) {
            int u = order[head];
            for (int e : grown[static_cast<size_t>(u)]) {
                const DetectorEdge& edge = detector.edges[static_cast<size_t>(e)];
                int v = edge.u == u ? edge.v : edge.u;
                if (visited[static_cast<size_t>(v)]) continue;
                visited[static_cast<size_t>(v)] = 1;
                parent_edge[static_cast<size_t>(v)] = e;
                order.push_back(v);
            }
        }

        // Peel leaf-inward: reverse BFS order pushes defects toward the root.
        for (size_t i = order.size(); i-- > 1;) {
            int v = order[i];
            if (!defect[static_cast<size_t>(v)]) continue;
            int e = parent_edge[static_cast<size_t>(v)];
            const DetectorEdge& edge = detector.edges[static_cast<size_t>(e)];
            const Mechanism& mech = detector.mechanisms[edge.mechanism];
            if (!mech.is_flip()) {
                correction.multiply_inplace(mech.pauli);
            }
            int u = edge.u == v ? edge.v : edge.u;
            defect[static_cast<size_t>(v)] = 0;
            defect[static_cast<size_t>(u)] ^= 1;
        }
        if (defect[static_cast<size_t>(tree_root)]) {
            if (exit_edge < 0) {
                throw std::logic_error("unpaired defect in a boundary-free cluster");
            }
            const Mechanism& mech =
                detector.mechanisms[detector.edges[static_cast<size_t>(exit_edge)].mechanism];
            if (!mech.is_flip()) {
                correction.multiply_inplace(mech.pauli);
            }
            defect[static_cast<size_t>(tree_root)] = 0;
        }
    }
    return correction;
}

PauliString unionfind_decode(const DetectorGraph& detector, const DetectionEvents& events) {
    ClusterState state = grow_clusters(detector, events);
    return peel(state);
}

}  // namespace symdec
