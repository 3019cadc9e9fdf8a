#pragma once

#include <cstdint>

#include "spanfactor/graph.hpp"

namespace spanfactor {

// Exact binomial coefficient with 128-bit accumulation; 0 when r < 0 or
// r > n. Throws on int64 overflow.
std::int64_t binomial(int n, int r);

// Number of r-vertex complete subgraphs, by recursive neighborhood
// intersection on word-parallel candidate masks.
std::int64_t count_cliques(const Graph& g, int r);

// Clique number by branch and bound.
int clique_number(const Graph& g);

struct PosaQuery {
    int s;  // vertex-count threshold, >= 1
    int q;  // degree threshold, >= 0
};

// True iff at least s vertices have degree at most q.
bool posa_property(const Graph& g, PosaQuery query);

// Clique-count bound for graphs with the (s,q)-Posa property:
// binomial(n-s, r) + s*binomial(q, r-1). Requires n >= s+q.
std::int64_t posa_clique_bound(int n, int s, int q, int r);

// Largest possible N_r over all graphs with exactly e edges (colex graph
// bound): with e = binomial(a,2)+b, 0 <= b < a, the maximum is
// binomial(a,r) + binomial(b,r-1). Used as an exact early-rejection filter.
std::int64_t max_cliques_with_edges(std::int64_t e, int r);

}  // namespace spanfactor
