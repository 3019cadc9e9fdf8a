#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "spanfactor/graph.hpp"

namespace oracles {

using spanfactor::Graph;

// Perfect-matching existence by recursive pairing of the lowest unmatched
// vertex with each of its neighbors.
inline bool pairing_rec(const Graph& g, std::uint64_t unmatched) {
    if (!unmatched) return true;
    const int v = std::countr_zero(unmatched);
    std::uint64_t partners = g.row(v) & unmatched;
    while (partners) {
        const int u = std::countr_zero(partners);
        partners &= partners - 1;
        if (pairing_rec(g, unmatched & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u)))
            return true;
    }
    return false;
}

inline bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return pairing_rec(g, spanfactor::full_set(g.order()));
}

// Maximum matching size by branch on the lowest vertex: either skip it or
// match it with each neighbor.
inline int max_matching_rec(const Graph& g, std::uint64_t alive) {
    if (!alive) return 0;
    const int v = std::countr_zero(alive);
    alive &= alive - 1;
    int best = max_matching_rec(g, alive);  // v unmatched
    std::uint64_t partners = g.row(v) & alive;
    while (partners) {
        const int u = std::countr_zero(partners);
        partners &= partners - 1;
        best = std::max(best, 1 + max_matching_rec(g, alive & ~(std::uint64_t{1} << u)));
    }
    return best;
}

inline int max_matching_size(const Graph& g) {
    return max_matching_rec(g, spanfactor::full_set(g.order()));
}

// l-closure by literal definition iteration: rescan all pairs until no
// qualifying pair remains.
inline Graph closure_by_definition(const Graph& g, int l) {
    Graph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u + 1 < h.order(); ++u)
            for (int v = u + 1; v < h.order(); ++v)
                if (!h.adjacent(u, v) && h.degree(u) + h.degree(v) >= l) {
                    h.add_edge(u, v);
                    changed = true;
                }
    }
    return h;
}

// N_r by enumerating r-subsets.
inline std::int64_t count_cliques_naive(const Graph& g, int r) {
    const int n = g.order();
    std::vector<int> pick(static_cast<std::size_t>(r));
    std::int64_t count = 0;
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == r) {
            ++count;
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) ok = g.adjacent(pick[static_cast<std::size_t>(i)], v);
            if (!ok) continue;
            pick[static_cast<std::size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Hamilton-path existence by bitmask DP over (visited set, endpoint).
inline bool has_hamilton_path(const Graph& g) {
    const int n = g.order();
    if (n == 1) return true;
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint64_t> reach(size, 0);  // bit e set: path over mask ending at e
    for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = std::uint64_t{1} << v;
    for (std::size_t mask = 1; mask < size; ++mask) {
        std::uint64_t ends = reach[mask];
        if (!ends) continue;
        if (mask == size - 1) return true;
        std::uint64_t m = ends;
        while (m) {
            const int e = std::countr_zero(m);
            m &= m - 1;
            std::uint64_t next = g.row(e) & ~static_cast<std::uint64_t>(mask);
            while (next) {
                const int w = std::countr_zero(next);
                next &= next - 1;
                reach[mask | (std::size_t{1} << w)] |= std::uint64_t{1} << w;
            }
        }
    }
    return reach[size - 1] != 0;
}

// Largest eigenvalue of the adjacency matrix by cyclic Jacobi sweeps.
inline double jacobi_spectral_radius(const Graph& g) {
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-18) continue;
                const double theta = 0.5 * std::atan2(2.0 * at(p, q), at(q, q) - at(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                for (int i = 0; i < n; ++i) {
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
    }
    double best = at(0, 0);
    for (int i = 1; i < n; ++i) best = std::max(best, at(i, i));
    return best;
}

// Deterministic xorshift-based random graph, independent of the harness RNG.
inline Graph random_graph(int n, double p, std::uint64_t& state) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if (static_cast<double>(state >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
        }
    return g;
}

}  // namespace oracles
