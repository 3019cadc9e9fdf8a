#include "spanfactor/closure.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spanfactor {

Graph l_closure(const Graph& g, int l) {
    const int n = g.order();
    Graph h = g;

    // Work queue over packed pairs u*64+v (u < v), seeded in lexicographic
    // order; pairs incident to an endpoint whose degree changed re-enter the
    // queue. A membership bitset keeps entries unique.
    std::vector<std::uint16_t> queue;
    queue.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) / 2);
    std::uint64_t queued[kMaxVertices] = {};
    auto push = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if ((queued[u] >> v) & 1u) return;
        queued[u] |= std::uint64_t{1} << v;
        queue.push_back(static_cast<std::uint16_t>(u * 64 + v));
    };
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v)) push(u, v);

    std::size_t head = 0;
    while (head < queue.size()) {
        const int u = queue[head] / 64;
        const int v = queue[head] % 64;
        ++head;
        queued[u] &= ~(std::uint64_t{1} << v);
        if (h.adjacent(u, v)) continue;
        if (h.degree(u) + h.degree(v) < l) continue;
        h.add_edge(u, v);
        for (int e : {u, v}) {
            std::uint64_t missing = ~h.row(e) & full_set(n) & ~(std::uint64_t{1} << e);
            while (missing) {
                int w = std::countr_zero(missing);
                missing &= missing - 1;
                push(e, w);
            }
        }
    }
    return h;
}

Graph closure_for_one_factor(const Graph& g) {
    return l_closure(g, g.order() - 1);
}

Graph closure_for_k_factor(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("k-factor closure needs k >= 2");
    return l_closure(g, g.order() + 2 * k - 4);
}

Graph closure_for_spanning_k_tree(const Graph& g, int k, int m) {
    if (k < 2) throw std::invalid_argument("spanning k-tree closure needs k >= 2");
    if (m < 1) throw std::invalid_argument("spanning k-tree closure needs m >= 1");
    return l_closure(g, g.order() - (k - 2) * m - 1);
}

}  // namespace spanfactor
