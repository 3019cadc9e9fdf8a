#include "spanfactor/cliques.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace spanfactor {

std::int64_t binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw std::overflow_error("binomial exceeds int64");
    }
    return static_cast<std::int64_t>(acc);
}

namespace {

std::int64_t cliques_in(const Graph& g, std::uint64_t candidates, int need) {
    if (need == 1) return std::popcount(candidates);
    std::int64_t total = 0;
    while (std::popcount(candidates) >= need) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        total += cliques_in(g, candidates & g.row(v), need - 1);
    }
    return total;
}

}  // namespace

std::int64_t count_cliques(const Graph& g, int r) {
    if (r < 1 || r > g.order()) throw std::invalid_argument("clique size must be in 1..n");
    return cliques_in(g, full_set(g.order()), r);
}

namespace {

void max_clique_rec(const Graph& g, std::uint64_t candidates, int current, int& best) {
    if (current + std::popcount(candidates) <= best) return;
    if (!candidates) {
        best = current;
        return;
    }
    while (candidates) {
        if (current + std::popcount(candidates) <= best) return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        max_clique_rec(g, candidates & g.row(v), current + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    max_clique_rec(g, full_set(g.order()), 0, best);
    return best;
}

bool posa_property(const Graph& g, PosaQuery query) {
    int low = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= query.q) ++low;
    return low >= query.s;
}

std::int64_t posa_clique_bound(int n, int s, int q, int r) {
    if (s < 1 || q < 0 || r < 1) throw std::invalid_argument("posa_clique_bound parameter out of range");
    if (n < s + q) throw std::domain_error("posa_clique_bound requires n >= s+q");
    return binomial(n - s, r) + static_cast<std::int64_t>(s) * binomial(q, r - 1);
}

std::int64_t max_cliques_with_edges(std::int64_t e, int r) {
    if (e < 0 || r < 1) throw std::invalid_argument("max_cliques_with_edges parameter out of range");
    int a = 0;
    while (binomial(a + 1, 2) <= e) ++a;
    const std::int64_t b = e - binomial(a, 2);
    return binomial(a, r) + binomial(static_cast<int>(b), r - 1);
}

}  // namespace spanfactor
