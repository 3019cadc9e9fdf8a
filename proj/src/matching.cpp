#include "spanfactor/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace spanfactor {

namespace {

// Edmonds' blossom algorithm, array formulation: `base` tracks the blossom
// base of each vertex, `parent` the alternating-tree edges; blossoms are
// contracted by lifting every member's base to the common ancestor.
class BlossomSolver {
public:
    explicit BlossomSolver(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), mate_(adj.size(), -1),
          parent_(adj.size()), base_(adj.size()), queue_(adj.size()),
          in_queue_(adj.size()), in_blossom_(adj.size()) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[sz(v)] >= 0) continue;
            for (int u : adj_[sz(v)]) {
                if (mate_[sz(u)] < 0) {
                    mate_[sz(v)] = u;
                    mate_[sz(u)] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (mate_[sz(v)] < 0) augment_from(v);
        return mate_;
    }

private:
    static std::size_t sz(int v) { return static_cast<std::size_t>(v); }

    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (int v = a;; v = parent_[sz(mate_[sz(v)])]) {
            v = base_[sz(v)];
            seen[sz(v)] = true;
            if (mate_[sz(v)] < 0) break;  // reached the tree root
        }
        for (int v = b;; v = parent_[sz(mate_[sz(v)])]) {
            v = base_[sz(v)];
            if (seen[sz(v)]) return v;
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[sz(v)] != b) {
            in_blossom_[sz(base_[sz(v)])] = true;
            in_blossom_[sz(base_[sz(mate_[sz(v)])])] = true;
            parent_[sz(v)] = child;
            child = mate_[sz(v)];
            v = parent_[sz(mate_[sz(v)])];
        }
    }

    void contract(int v, int u) {
        const int b = lowest_common_base(v, u);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_path(v, b, u);
        mark_path(u, b, v);
        for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[sz(base_[sz(i)])]) continue;
            base_[sz(i)] = b;
            if (!in_queue_[sz(i)]) {
                in_queue_[sz(i)] = true;
                queue_[sz(tail_++)] = i;
            }
        }
    }

    bool augment_from(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(in_queue_.begin(), in_queue_.end(), false);
        for (int i = 0; i < n_; ++i) base_[sz(i)] = i;
        head_ = tail_ = 0;
        queue_[sz(tail_++)] = root;
        in_queue_[sz(root)] = true;

        while (head_ < tail_) {
            const int v = queue_[sz(head_++)];
            for (int u : adj_[sz(v)]) {
                if (base_[sz(v)] == base_[sz(u)] || mate_[sz(v)] == u) continue;
                if (u == root || (mate_[sz(u)] >= 0 && parent_[sz(mate_[sz(u)])] >= 0)) {
                    contract(v, u);
                } else if (parent_[sz(u)] < 0) {
                    parent_[sz(u)] = v;
                    if (mate_[sz(u)] < 0) {
                        flip_path(u);
                        return true;
                    }
                    const int w = mate_[sz(u)];
                    if (!in_queue_[sz(w)]) {
                        in_queue_[sz(w)] = true;
                        queue_[sz(tail_++)] = w;
                    }
                }
            }
        }
        return false;
    }

    void flip_path(int u) {
        while (u >= 0) {
            const int pv = parent_[sz(u)];
            const int next = mate_[sz(pv)];
            mate_[sz(u)] = pv;
            mate_[sz(pv)] = u;
            u = next;
        }
    }

    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<int> mate_, parent_, base_, queue_;
    std::vector<bool> in_queue_, in_blossom_;
    int head_ = 0, tail_ = 0;
};

}  // namespace

std::vector<int> maximum_matching_mates(const std::vector<std::vector<int>>& adj) {
    return BlossomSolver(adj).solve();
}

Matching max_matching(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint64_t nb = g.row(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
    }
    const std::vector<int> mate = maximum_matching_mates(adj);
    Matching m;
    for (int v = 0; v < n; ++v)
        if (mate[static_cast<std::size_t>(v)] > v)
            m.edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    return m;
}

std::optional<Matching> has_one_factor(const Graph& g) {
    const int n = g.order();
    if (n % 2 != 0) return std::nullopt;
    Matching m = max_matching(g);
    if (m.size() * 2 != n) return std::nullopt;
    return m;
}

}  // namespace spanfactor
