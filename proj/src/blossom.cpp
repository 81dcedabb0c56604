#include "symdec/blossom.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symdec {

namespace {

constexpr int kNone = -1;

// Primal-dual weighted blossom matcher (Edmonds' algorithm in Galil's
// formulation). Vertices are 0..nv-1; blossoms take ids nv..2*nv-1 and are
// recycled. mate_ maps vertex -> vertex. Requires a simple graph.
class BlossomMatcher {
  public:
    BlossomMatcher(int nv, const std::vector<WeightedEdge>& edges, bool max_cardinality)
        : nv_(nv), max_cardinality_(max_cardinality) {
        weight_.assign(static_cast<size_t>(nv_) * nv_, 0.0);
        have_edge_.assign(static_cast<size_t>(nv_) * nv_, false);
        edge_index_.assign(static_cast<size_t>(nv_) * nv_, -1);
        adjacency_.assign(nv_, {});
        max_weight_ = 0;
        double scale = 0;
        int ne = 0;
        for (const auto& [i, j, w] : edges) {
            if (i < 0 || i >= nv_ || j < 0 || j >= nv_ || i == j) {
                throw std::invalid_argument("bad edge in matching graph");
            }
            if (have_edge_[idx(i, j)]) {
                throw std::invalid_argument("duplicate edge in matching graph");
            }
            have_edge_[idx(i, j)] = have_edge_[idx(j, i)] = true;
            weight_[idx(i, j)] = weight_[idx(j, i)] = w;
            edge_index_[idx(i, j)] = edge_index_[idx(j, i)] = ne++;
            adjacency_[i].push_back(j);
            adjacency_[j].push_back(i);
            max_weight_ = std::max(max_weight_, w);
            scale = std::max(scale, std::abs(w));
        }
        ne_ = ne;
        tol_ = 1e-10 * (1.0 + scale);

        mate_.assign(nv_, kNone);
        label_.assign(2 * nv_, 0);
        label_edge_.assign(2 * nv_, {kNone, kNone});
        in_blossom_.resize(nv_);
        for (int v = 0; v < nv_; v++) in_blossom_[v] = v;
        blossom_parent_.assign(2 * nv_, kNone);
        blossom_base_.assign(2 * nv_, kNone);
        for (int v = 0; v < nv_; v++) blossom_base_[v] = v;
        blossom_childs_.assign(2 * nv_, {});
        blossom_edges_.assign(2 * nv_, {});
        blossom_alive_.assign(2 * nv_, false);
        best_edge_.assign(2 * nv_, {kNone, kNone});
        my_best_edges_.assign(2 * nv_, {});
        has_best_edges_.assign(2 * nv_, false);
        dual_var_.assign(nv_, max_weight_);
        blossom_dual_.assign(2 * nv_, 0.0);
        for (int b = 2 * nv_ - 1; b >= nv_; b--) unused_blossoms_.push_back(b);
        allow_edge_.assign(ne_, false);
    }

    std::vector<int> run() {
        if (ne_ == 0) return mate_;
        while (stage()) {
        }
        for (int v = 0; v < nv_; v++) {
            assert(mate_[v] == kNone || mate_[mate_[v]] == v);
        }
        return mate_;
    }

  private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(nv_) + static_cast<size_t>(j);
    }
    double slack(int v, int w) const {
        return dual_var_[v] + dual_var_[w] - 2.0 * weight_[idx(v, w)];
    }
    double slack(const std::pair<int, int>& e) const { return slack(e.first, e.second); }
    bool is_blossom(int b) const { return b >= nv_; }
    bool allowed(int v, int w) const { return allow_edge_[static_cast<size_t>(edge_index_[idx(v, w)])]; }
    void set_allowed(int v, int w) { allow_edge_[static_cast<size_t>(edge_index_[idx(v, w)])] = true; }

    template <typename F>
    void for_leaves(int b, F&& f) const {
        if (!is_blossom(b)) {
            f(b);
            return;
        }
        for (int child : blossom_childs_[b]) {
            for_leaves(child, f);
        }
    }

    void assign_label(int w, int t, int v) {
        int b = in_blossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        if (v != kNone) {
            label_edge_[w] = label_edge_[b] = {v, w};
        } else {
            label_edge_[w] = label_edge_[b] = {kNone, kNone};
        }
        best_edge_[w] = best_edge_[b] = {kNone, kNone};
        if (t == 1) {
            for_leaves(b, [&](int leaf) { queue_.push_back(leaf); });
        } else if (t == 2) {
            int base = blossom_base_[b];
            assign_label(mate_[base], 1, base);
        }
    }

    // Trace back from v and w to find a common ancestor (new blossom base) or
    // conclude the paths reach different roots (augmenting path); -1 = none.
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = kNone;
        while (v != kNone) {
            int b = in_blossom_[v];
            if (label_[b] & 4) {
                base = blossom_base_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            if (label_edge_[b].first == kNone) {
                assert(mate_[blossom_base_[b]] == kNone);
                v = kNone;
            } else {
                assert(label_edge_[b].first == mate_[blossom_base_[b]]);
                v = label_edge_[b].first;
                b = in_blossom_[v];
                assert(label_[b] == 2);
                v = label_edge_[b].first;
            }
            if (w != kNone) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int v, int w) {
        int bb = in_blossom_[base];
        int bv = in_blossom_[v];
        int bw = in_blossom_[w];
        assert(!unused_blossoms_.empty());
        int b = unused_blossoms_.back();
        unused_blossoms_.pop_back();
        blossom_alive_[b] = true;
        blossom_base_[b] = base;
        blossom_parent_[b] = kNone;
        blossom_parent_[bb] = b;
        std::vector<int>& path = blossom_childs_[b];
        std::vector<std::pair<int, int>>& edgs = blossom_edges_[b];
        path.clear();
        edgs.clear();
        edgs.emplace_back(v, w);
        while (bv != bb) {
            blossom_parent_[bv] = b;
            path.push_back(bv);
            edgs.push_back(label_edge_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && label_edge_[bv].first == mate_[blossom_base_[bv]]));
            v = label_edge_[bv].first;
            bv = in_blossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(edgs.begin(), edgs.end());
        while (bw != bb) {
            blossom_parent_[bw] = b;
            path.push_back(bw);
            edgs.emplace_back(label_edge_[bw].second, label_edge_[bw].first);
            assert(label_[bw] == 2 ||
                   (label_[bw] == 1 && label_edge_[bw].first == mate_[blossom_base_[bw]]));
            w = label_edge_[bw].first;
            bw = in_blossom_[w];
        }
        assert(label_[bb] == 1);
        label_[b] = 1;
        label_edge_[b] = label_edge_[bb];
        blossom_dual_[b] = 0;
        for_leaves(b, [&](int leaf) {
            if (label_[in_blossom_[leaf]] == 2) {
                queue_.push_back(leaf);
            }
            in_blossom_[leaf] = b;
        });
        // Merge the least-slack edge lists of the sub-blossoms.
        std::vector<std::pair<int, int>> best_edge_to(2 * nv_, {kNone, kNone});
        for (int child : path) {
            std::vector<std::pair<int, int>> nblist;
            if (is_blossom(child) && has_best_edges_[child]) {
                nblist = my_best_edges_[child];
            } else {
                for_leaves(child, [&](int leaf) {
                    for (int nb : adjacency_[leaf]) {
                        nblist.emplace_back(leaf, nb);
                    }
                });
            }
            for (auto [ei, ej] : nblist) {
                if (in_blossom_[ej] == b) std::swap(ei, ej);
                int bj = in_blossom_[ej];
                if (bj != b && label_[bj] == 1 &&
                    (best_edge_to[bj].first == kNone ||
                     slack(ei, ej) < slack(best_edge_to[bj]))) {
                    best_edge_to[bj] = {ei, ej};
                }
            }
            if (is_blossom(child)) {
                my_best_edges_[child].clear();
                has_best_edges_[child] = false;
            }
            best_edge_[child] = {kNone, kNone};
        }
        my_best_edges_[b].clear();
        for (const auto& e : best_edge_to) {
            if (e.first != kNone) my_best_edges_[b].push_back(e);
        }
        has_best_edges_[b] = true;
        best_edge_[b] = {kNone, kNone};
        for (const auto& e : my_best_edges_[b]) {
            if (best_edge_[b].first == kNone || slack(e) < slack(best_edge_[b])) {
                best_edge_[b] = e;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossom_childs_[b]) {
            blossom_parent_[s] = kNone;
            if (!is_blossom(s)) {
                in_blossom_[s] = s;
            } else if (endstage && blossom_dual_[s] < tol_) {
                expand_blossom(s, endstage);
            } else {
                for_leaves(s, [&](int leaf) { in_blossom_[leaf] = s; });
            }
        }
        if (!endstage && label_[b] == 2) {
            int entry_child = in_blossom_[label_edge_[b].second];
            int m = static_cast<int>(blossom_childs_[b].size());
            auto childs_at = [&](int i) {
                return blossom_childs_[b][static_cast<size_t>((i % m + m) % m)];
            };
            auto edges_at = [&](int i) {
                return blossom_edges_[b][static_cast<size_t>((i % m + m) % m)];
            };
            int j = static_cast<int>(
                std::find(blossom_childs_[b].begin(), blossom_childs_[b].end(), entry_child) -
                blossom_childs_[b].begin());
            int jstep;
            if (j & 1) {
                j -= m;
                jstep = 1;
            } else {
                jstep = -1;
            }
            auto [v, w] = label_edge_[b];
            while (j != 0) {
                int p, q;
                if (jstep == 1) {
                    std::tie(p, q) = edges_at(j);
                } else {
                    std::tie(q, p) = edges_at(j - 1);
                }
                label_[w] = 0;
                label_[q] = 0;
                assign_label(w, 2, v);
                set_allowed(p, q);
                j += jstep;
                if (jstep == 1) {
                    std::tie(v, w) = edges_at(j);
                } else {
                    std::tie(w, v) = edges_at(j - 1);
                }
                set_allowed(v, w);
                j += jstep;
            }
            int bw = childs_at(j);
            label_[w] = 2;
            label_[bw] = 2;
            label_edge_[w] = label_edge_[bw] = {v, w};
            best_edge_[bw] = {kNone, kNone};
            j += jstep;
            while (childs_at(j) != entry_child) {
                int bv = childs_at(j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int labeled = kNone;
                for_leaves(bv, [&](int leaf) {
                    if (labeled == kNone && label_[leaf] != 0) labeled = leaf;
                });
                if (labeled != kNone) {
                    assert(label_[labeled] == 2);
                    assert(in_blossom_[labeled] == bv);
                    label_[labeled] = 0;
                    label_[mate_[blossom_base_[bv]]] = 0;
                    assign_label(labeled, 2, label_edge_[labeled].first);
                }
                j += jstep;
            }
        }
        label_[b] = 0;
        label_edge_[b] = {kNone, kNone};
        best_edge_[b] = {kNone, kNone};
        blossom_childs_[b].clear();
        blossom_edges_[b].clear();
        blossom_base_[b] = kNone;
        blossom_dual_[b] = 0;
        my_best_edges_[b].clear();
        has_best_edges_[b] = false;
        blossom_alive_[b] = false;
        unused_blossoms_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossom_parent_[t] != b) t = blossom_parent_[t];
        if (is_blossom(t)) augment_blossom(t, v);
        int m = static_cast<int>(blossom_childs_[b].size());
        auto childs_at = [&](int k) {
            return blossom_childs_[b][static_cast<size_t>((k % m + m) % m)];
        };
        auto edges_at = [&](int k) {
            return blossom_edges_[b][static_cast<size_t>((k % m + m) % m)];
        };
        int i = static_cast<int>(
            std::find(blossom_childs_[b].begin(), blossom_childs_[b].end(), t) -
            blossom_childs_[b].begin());
        int j = i;
        int jstep;
        if (i & 1) {
            j -= m;
            jstep = 1;
        } else {
            jstep = -1;
        }
        while (j != 0) {
            j += jstep;
            int w, x;
            if (jstep == 1) {
                std::tie(w, x) = edges_at(j);
            } else {
                std::tie(x, w) = edges_at(j - 1);
            }
            if (is_blossom(childs_at(j))) augment_blossom(childs_at(j), w);
            j += jstep;
            if (is_blossom(childs_at(j))) augment_blossom(childs_at(j), x);
            mate_[w] = x;
            mate_[x] = w;
        }
        std::rotate(blossom_childs_[b].begin(), blossom_childs_[b].begin() + i,
                    blossom_childs_[b].end());
        std::rotate(blossom_edges_[b].begin(), blossom_edges_[b].begin() + i,
                    blossom_edges_[b].end());
        blossom_base_[b] = blossom_base_[blossom_childs_[b][0]];
        assert(blossom_base_[b] == v);
    }

    // Swap matched/unmatched edges along the augmenting path through (v, w).
    void augment_matching(int v, int w) {
        for (auto [s, j] : {std::pair<int, int>{v, w}, std::pair<int, int>{w, v}}) {
            while (true) {
                int bs = in_blossom_[s];
                assert(label_[bs] == 1);
                assert((label_edge_[bs].first == kNone && mate_[blossom_base_[bs]] == kNone) ||
                       label_edge_[bs].first == mate_[blossom_base_[bs]]);
                if (is_blossom(bs)) augment_blossom(bs, s);
                mate_[s] = j;
                if (label_edge_[bs].first == kNone) break;  // single vertex
                int t = label_edge_[bs].first;
                int bt = in_blossom_[t];
                assert(label_[bt] == 2);
                std::tie(s, j) = label_edge_[bt];
                assert(blossom_base_[bt] == t);
                if (is_blossom(bt)) augment_blossom(bt, j);
                mate_[j] = s;
            }
        }
    }

    // One stage: grow the alternating forest until an augmenting path is
    // found or the duals certify optimality. False = no augmentation.
    bool stage() {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(label_edge_.begin(), label_edge_.end(), std::pair<int, int>{kNone, kNone});
        std::fill(best_edge_.begin(), best_edge_.end(), std::pair<int, int>{kNone, kNone});
        for (int b = nv_; b < 2 * nv_; b++) {
            my_best_edges_[b].clear();
            has_best_edges_[b] = false;
        }
        std::fill(allow_edge_.begin(), allow_edge_.end(), false);
        queue_.clear();

        for (int v = 0; v < nv_; v++) {
            if (mate_[v] == kNone && label_[in_blossom_[v]] == 0) {
                assign_label(v, 1, kNone);
            }
        }

        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                int v = queue_.back();
                queue_.pop_back();
                assert(label_[in_blossom_[v]] == 1);
                for (int w : adjacency_[v]) {
                    int bv = in_blossom_[v];
                    int bw = in_blossom_[w];
                    if (bv == bw) continue;
                    double kslack = 0;
                    if (!allowed(v, w)) {
                        kslack = slack(v, w);
                        if (kslack <= tol_) set_allowed(v, w);
                    }
                    if (allowed(v, w)) {
                        if (label_[bw] == 0) {
                            assign_label(w, 2, v);
                        } else if (label_[bw] == 1) {
                            int base = scan_blossom(v, w);
                            if (base != kNone) {
                                add_blossom(base, v, w);
                            } else {
                                augment_matching(v, w);
                                augmented = true;
                                break;
                            }
                        } else if (label_[w] == 0) {
                            assert(label_[bw] == 2);
                            label_[w] = 2;
                            label_edge_[w] = {v, w};
                        }
                    } else if (label_[bw] == 1) {
                        if (best_edge_[bv].first == kNone || kslack < slack(best_edge_[bv])) {
                            best_edge_[bv] = {v, w};
                        }
                    } else if (label_[w] == 0) {
                        if (best_edge_[w].first == kNone || kslack < slack(best_edge_[w])) {
                            best_edge_[w] = {v, w};
                        }
                    }
                }
            }
            if (augmented) break;

            // Dual update: the smallest of the four classical deltas.
            int delta_type = -1;
            double delta = 0;
            std::pair<int, int> delta_edge{kNone, kNone};
            int delta_blossom = kNone;
            if (!max_cardinality_) {
                delta_type = 1;
                delta = std::max(0.0, *std::min_element(dual_var_.begin(), dual_var_.end()));
            }
            for (int v = 0; v < nv_; v++) {
                if (label_[in_blossom_[v]] == 0 && best_edge_[v].first != kNone) {
                    double d = slack(best_edge_[v]);
                    if (delta_type == -1 || d < delta) {
                        delta = d;
                        delta_type = 2;
                        delta_edge = best_edge_[v];
                    }
                }
            }
            for (int b = 0; b < 2 * nv_; b++) {
                if (blossom_parent_[b] == kNone && label_[b] == 1 &&
                    best_edge_[b].first != kNone) {
                    double d = slack(best_edge_[b]) / 2.0;
                    if (delta_type == -1 || d < delta) {
                        delta = d;
                        delta_type = 3;
                        delta_edge = best_edge_[b];
                    }
                }
            }
            for (int b = nv_; b < 2 * nv_; b++) {
                if (blossom_alive_[b] && blossom_parent_[b] == kNone && label_[b] == 2 &&
                    (delta_type == -1 || blossom_dual_[b] < delta)) {
                    delta = blossom_dual_[b];
                    delta_type = 4;
                    delta_blossom = b;
                }
            }
            if (delta_type == -1) {
                // Max-cardinality optimum reached.
                assert(max_cardinality_);
                delta_type = 1;
                delta = std::max(0.0, *std::min_element(dual_var_.begin(), dual_var_.end()));
            }

            for (int v = 0; v < nv_; v++) {
                int lbl = label_[in_blossom_[v]];
                if (lbl == 1) {
                    dual_var_[v] -= delta;
                } else if (lbl == 2) {
                    dual_var_[v] += delta;
                }
            }
            for (int b = nv_; b < 2 * nv_; b++) {
                if (blossom_alive_[b] && blossom_parent_[b] == kNone) {
                    if (label_[b] == 1) {
                        blossom_dual_[b] += delta;
                    } else if (label_[b] == 2) {
                        blossom_dual_[b] -= delta;
                    }
                }
            }

            if (delta_type == 1) {
                break;
            } else if (delta_type == 2) {
                auto [i, j] = delta_edge;
                set_allowed(i, j);
                if (label_[in_blossom_[i]] == 0) std::swap(i, j);
                assert(label_[in_blossom_[i]] == 1);
                queue_.push_back(i);
            } else if (delta_type == 3) {
                set_allowed(delta_edge.first, delta_edge.second);
                assert(label_[in_blossom_[delta_edge.first]] == 1);
                queue_.push_back(delta_edge.first);
            } else {
                expand_blossom(delta_blossom, false);
            }
        }

        if (!augmented) return false;

        // End of stage: expand all S-blossoms with zero dual.
        for (int b = nv_; b < 2 * nv_; b++) {
            if (blossom_alive_[b] && blossom_parent_[b] == kNone && label_[b] == 1 &&
                blossom_dual_[b] < tol_) {
                expand_blossom(b, true);
            }
        }
        return true;
    }

    int nv_;
    bool max_cardinality_;
    int ne_ = 0;
    double max_weight_ = 0;
    double tol_ = 0;

    std::vector<double> weight_;
    std::vector<bool> have_edge_;
    std::vector<int> edge_index_;
    std::vector<std::vector<int>> adjacency_;

    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<std::pair<int, int>> label_edge_;
    std::vector<int> in_blossom_;
    std::vector<int> blossom_parent_;
    std::vector<int> blossom_base_;
    std::vector<std::vector<int>> blossom_childs_;
    std::vector<std::vector<std::pair<int, int>>> blossom_edges_;
    std::vector<bool> blossom_alive_;
    std::vector<std::pair<int, int>> best_edge_;
    std::vector<std::vector<std::pair<int, int>>> my_best_edges_;
    std::vector<bool> has_best_edges_;
    std::vector<int> unused_blossoms_;
    std::vector<double> dual_var_;
    std::vector<double> blossom_dual_;
    std::vector<bool> allow_edge_;
    std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_matching(int num_vertices,
                                     const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality) {
    if (num_vertices == 0) return {};
    BlossomMatcher matcher(num_vertices, edges, max_cardinality);
    return matcher.run();
}

std::vector<int> min_weight_perfect_matching(int num_vertices,
                                             const std::vector<WeightedEdge>& edges) {
    std::vector<WeightedEdge> negated;
    negated.reserve(edges.size());
    for (const auto& [i, j, w] : edges) {
        negated.emplace_back(i, j, -w);
    }
    std::vector<int> mate = max_weight_matching(num_vertices, negated, true);
    for (int v = 0; v < num_vertices; v++) {
        if (mate[static_cast<size_t>(v)] == kNone) {
            throw std::runtime_error("graph has no perfect matching");
        }
    }
    return mate;
}

}  // namespace symdec
