#include "spanfactor/spanning_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spanfactor {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Shared frontier machinery for the two tree searches. The search space is
// partitioned by include/exclude branching on one tree-to-unreached edge at a
// time: every spanning tree extending the current partial tree and avoiding
// the forbidden edges lands in exactly one branch, so the search is complete.
struct SearchState {
    const Graph& g;
    int n;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    VertexSet in_tree = 1;  // rooted at vertex 0
    int deg[kMaxVertices] = {};
    std::uint64_t forb[kMaxVertices] = {};
    std::pair<int, int> edge_stack[kMaxVertices];
    int edge_count = 0;

    SearchState(const Graph& graph, std::uint64_t node_budget)
        : g(graph), n(graph.order()), budget(node_budget) {}

    bool tick() {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    // All unreached vertices reachable from `seed` through non-forbidden
    // edges, traversing the unreached region.
    bool all_unreached_reachable(VertexSet seed) const {
        const VertexSet unreached = full_set(n) & ~in_tree;
        if (!unreached) return true;
        VertexSet reach = 0;
        VertexSet frontier = seed;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const VertexSet fresh = g.row(v) & ~forb[v] & unreached & ~reach;
            reach |= fresh;
            frontier |= fresh;
        }
        return (unreached & ~reach) == 0;
    }

    void attach(int t, int u) {
        in_tree |= bit(u);
        ++deg[t];
        ++deg[u];
        edge_stack[edge_count++] = {t, u};
    }

    void detach(int t, int u) {
        in_tree &= ~bit(u);
        --deg[t];
        --deg[u];
        --edge_count;
    }

    TreeCertificate certificate() const {
        TreeCertificate cert;
        cert.edges.assign(edge_stack, edge_stack + edge_count);
        for (auto& [u, v] : cert.edges)
            if (u > v) std::swap(u, v);
        std::sort(cert.edges.begin(), cert.edges.end());
        return cert;
    }
};

// Group pigeonhole over identical candidate-parent masks: `keys[i]` is the
// candidate set of the i-th constrained vertex, `capacity(mask)` the total
// load the vertices of `mask` can still absorb. Returns false when some
// group provably overflows.
template <typename CapacityFn>
bool groups_fit(const std::uint64_t* keys, int count, CapacityFn capacity) {
    for (int i = 0; i < count; ++i) {
        if (keys[i] == 0) return false;
        int same = 0;
        bool first = true;
        for (int j = 0; j < i; ++j)
            if (keys[j] == keys[i]) { first = false; break; }
        if (!first) continue;
        for (int j = i; j < count; ++j)
            if (keys[j] == keys[i]) ++same;
        if (same > capacity(keys[i])) return false;
    }
    return true;
}

struct KTreeSearch : SearchState {
    int k;

    KTreeSearch(const Graph& graph, int degree_cap, std::uint64_t node_budget)
        : SearchState(graph, node_budget), k(degree_cap) {}

    VertexSet spare_mask() const {
        VertexSet spare = 0;
        VertexSet m = in_tree;
        while (m) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (deg[v] < k) spare |= bit(v);
        }
        return spare;
    }

    // Each connected component of the unreached region must hang off at
    // least one spare slot on its fixed tree boundary (unreached neighbors
    // stay within the component, so the boundary can only shrink). Group
    // components by boundary: more components than slots is a dead end; an
    // empty boundary doubles as the reachability test.
    bool prune(VertexSet spare) const {
        const VertexSet unreached = full_set(n) & ~in_tree;
        std::uint64_t keys[kMaxVertices];
        int count = 0;
        VertexSet left = unreached;
        while (left) {
            VertexSet comp = bit(std::countr_zero(left));
            VertexSet frontier = comp;
            std::uint64_t boundary = 0;
            while (frontier) {
                const int w = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const std::uint64_t usable = g.row(w) & ~forb[w];
                boundary |= usable & in_tree;
                const VertexSet fresh = usable & unreached & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= ~comp;
            keys[count++] = boundary & spare;
        }
        auto capacity = [this](std::uint64_t mask) {
            int cap = 0;
            while (mask) {
                const int v = std::countr_zero(mask);
                mask &= mask - 1;
                cap += k - deg[v];
            }
            return cap;
        };
        return !groups_fit(keys, count, capacity);
    }

    bool dfs() {
        if (!tick()) return false;
        if (in_tree == full_set(n)) return true;
        const VertexSet spare = spare_mask();
        if (prune(spare)) return false;
        const VertexSet unreached = full_set(n) & ~in_tree;
        VertexSet m = unreached;
        int u = -1;
        std::uint64_t cand = 0;
        while (m) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            cand = g.row(w) & ~forb[w] & spare;
            if (cand) {
                u = w;
                break;
            }
        }
        if (u < 0) return false;
        const int t = std::countr_zero(cand);
        attach(t, u);
        if (dfs()) return true;
        detach(t, u);
        if (budget_hit) return false;
        forb[u] |= bit(t);
        forb[t] |= bit(u);
        const bool found = dfs();
        forb[u] &= ~bit(t);
        forb[t] &= ~bit(u);
        return found;
    }
};

struct LeafTreeSearch : SearchState {
    int k;
    int stamp[kMaxVertices] = {};  // attach order, for chain-first parenting
    int next_stamp = 1;

    LeafTreeSearch(const Graph& graph, int leaf_cap, std::uint64_t node_budget)
        : SearchState(graph, node_budget), k(leaf_cap) {}

    // Lower bound on the final number of leaf neighbors of each tree vertex:
    // current degree-1 tree vertices that can never gain another edge stay
    // leaves forever.
    bool prune() const {
        if (!all_unreached_reachable(in_tree)) return true;
        const VertexSet unreached = full_set(n) & ~in_tree;
        int fin[kMaxVertices] = {};
        for (int i = 0; i < edge_count; ++i) {
            const auto [a, b] = edge_stack[i];
            for (int leaf : {a, b}) {
                if (deg[leaf] != 1) continue;
                if (g.row(leaf) & ~forb[leaf] & unreached) continue;
                ++fin[leaf == a ? b : a];
            }
        }
        VertexSet m = in_tree;
        while (m) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (fin[v] > k) return true;
        }
        // Unreached vertices that can never have children of their own become
        // leaves of whichever candidate parent they attach to.
        std::uint64_t keys[kMaxVertices];
        int count = 0;
        m = unreached;
        while (m) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            const std::uint64_t usable = g.row(w) & ~forb[w];
            if (usable & unreached) continue;
            keys[count++] = usable;
        }
        auto capacity = [&fin, this](std::uint64_t mask) {
            int cap = 0;
            while (mask) {
                const int v = std::countr_zero(mask);
                mask &= mask - 1;
                cap += k - fin[v];
            }
            return cap;
        };
        return !groups_fit(keys, count, capacity);
    }

    bool tree_leaf_degree_ok() const {
        int leaves_at[kMaxVertices] = {};
        for (int i = 0; i < edge_count; ++i) {
            const auto [a, b] = edge_stack[i];
            if (deg[a] == 1) ++leaves_at[b];
            if (deg[b] == 1) ++leaves_at[a];
        }
        for (int v = 0; v < n; ++v)
            if (leaves_at[v] > k) return false;
        return true;
    }

    bool dfs() {
        if (!tick()) return false;
        if (in_tree == full_set(n)) return tree_leaf_degree_ok();
        if (prune()) return false;
        const VertexSet unreached = full_set(n) & ~in_tree;
        VertexSet m = unreached;
        int u = -1;
        std::uint64_t cand = 0;
        while (m) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            cand = g.row(w) & ~forb[w] & in_tree;
            if (cand) {
                u = w;
                break;
            }
        }
        if (u < 0) return false;
        // Prefer the most recently attached parent: chain-like growth finds
        // low-leaf-degree trees quickly in dense graphs.
        int t = -1;
        std::uint64_t cm = cand;
        while (cm) {
            const int v = std::countr_zero(cm);
            cm &= cm - 1;
            if (t < 0 || stamp[v] > stamp[t]) t = v;
        }
        attach(t, u);
        stamp[u] = next_stamp++;
        if (dfs()) return true;
        stamp[u] = 0;
        detach(t, u);
        if (budget_hit) return false;
        forb[u] |= bit(t);
        forb[t] |= bit(u);
        const bool found = dfs();
        forb[u] &= ~bit(t);
        forb[t] &= ~bit(u);
        return found;
    }
};

template <typename Search>
TreeSearchResult run_search(Search& search) {
    const bool found = search.dfs();
    TreeSearchResult result;
    result.nodes_explored = search.nodes;
    if (found) {
        result.status = SearchStatus::Found;
        result.tree = search.certificate();
    } else {
        result.status = search.budget_hit ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    }
    return result;
}

}  // namespace

TreeSearchResult has_spanning_k_tree(const Graph& g, int k, std::uint64_t budget) {
    if (!g.is_connected()) throw std::invalid_argument("has_spanning_k_tree requires a connected graph");
    if (k < 2) throw std::invalid_argument("has_spanning_k_tree requires k >= 2");
    if (g.order() > 24) throw std::invalid_argument("has_spanning_k_tree capped at n <= 24");
    KTreeSearch search(g, k, budget);
    TreeSearchResult result = run_search(search);
    if (result.tree) {
        const int deg_max = [&] {
            int deg[kMaxVertices] = {};
            int top = 0;
            for (auto [u, v] : result.tree->edges) top = std::max({top, ++deg[u], ++deg[v]});
            return top;
        }();
        if (static_cast<int>(result.tree->edges.size()) != g.order() - 1 || deg_max > k)
            throw std::logic_error("spanning k-tree certificate violates its bound");
    }
    return result;
}

int leaf_degree(const TreeCertificate& t, int n) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("leaf_degree requires 2 <= n <= 64");
    if (static_cast<int>(t.edges.size()) != n - 1)
        throw std::invalid_argument("tree must have exactly n-1 edges");
    int deg[kMaxVertices] = {};
    VertexSet reach = 1;
    for (auto [u, v] : t.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("tree edge out of range");
        ++deg[u];
        ++deg[v];
    }
    // n-1 edges + connected == tree; grow reachability to convergence.
    for (int pass = 0; pass < n; ++pass)
        for (auto [u, v] : t.edges) {
            if ((reach >> u) & 1u) reach |= bit(v);
            if ((reach >> v) & 1u) reach |= bit(u);
        }
    if (reach != full_set(n)) throw std::invalid_argument("edge set is not a spanning tree");
    if (n == 2) return 1;
    int best = 0;
    int leaves_at[kMaxVertices] = {};
    for (auto [u, v] : t.edges) {
        if (deg[v] == 1) ++leaves_at[u];
        if (deg[u] == 1) ++leaves_at[v];
    }
    for (int v = 0; v < n; ++v) best = std::max(best, leaves_at[v]);
    return best;
}

std::optional<SubsetCertificate> kaneko_check(const Graph& g, int k) {
    if (!g.is_connected()) throw std::invalid_argument("kaneko_check requires a connected graph");
    if (k < 1) throw std::invalid_argument("kaneko_check requires k >= 1");
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("kaneko_check capped at n <= 24");
    const VertexSet all = full_set(n);
    for (int size = 1; size <= n; ++size) {
        VertexSet s = (std::uint64_t{1} << size) - 1;
        const VertexSet limit = std::uint64_t{1} << n;  // n <= 24, no overflow
        while (s < limit) {
            int isolated = 0;
            VertexSet outside = all & ~s;
            VertexSet m = outside;
            while (m) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                if ((g.row(v) & outside) == 0) ++isolated;
            }
            if (isolated >= (k + 1) * size) return SubsetCertificate{s, isolated};
            if (size == n) break;
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

TreeSearchResult has_spanning_tree_leaf_deg(const Graph& g, int k, std::uint64_t budget) {
    if (!g.is_connected())
        throw std::invalid_argument("has_spanning_tree_leaf_deg requires a connected graph");
    if (k < 1) throw std::invalid_argument("has_spanning_tree_leaf_deg requires k >= 1");
    if (g.order() > 20) throw std::invalid_argument("has_spanning_tree_leaf_deg capped at n <= 20");
    LeafTreeSearch search(g, k, budget);
    TreeSearchResult result = run_search(search);
    if (result.tree && g.order() >= 2 && leaf_degree(*result.tree, g.order()) > k)
        throw std::logic_error("leaf-degree certificate violates its bound");
    return result;
}

MinMaxDegree spanning_tree_min_max_degree(const Graph& g, std::uint64_t budget) {
    if (!g.is_connected())
        throw std::invalid_argument("spanning_tree_min_max_degree requires a connected graph");
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("spanning_tree_min_max_degree capped at n <= 20");
    if (n == 1) return {0, TreeCertificate{}};
    if (n == 2) return {1, TreeCertificate{{{0, 1}}}};
    int lo = 2, hi = n - 1;
    TreeCertificate best;
    {
        TreeSearchResult r = has_spanning_k_tree(g, hi, budget);
        if (r.status == SearchStatus::BudgetExceeded)
            throw std::runtime_error("spanning_tree_min_max_degree budget exceeded");
        best = *r.tree;  // any spanning tree of a connected graph has max degree <= n-1
    }
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        TreeSearchResult r = has_spanning_k_tree(g, mid, budget);
        if (r.status == SearchStatus::BudgetExceeded)
            throw std::runtime_error("spanning_tree_min_max_degree budget exceeded");
        if (r.status == SearchStatus::Found) {
            best = *r.tree;
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return {lo, best};
}

}  // namespace spanfactor
