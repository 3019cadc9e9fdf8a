#pragma once

#include "spanfactor/graph.hpp"

namespace spanfactor {

// l-closure: repeatedly join nonadjacent pairs with degree sum >= l until no
// such pair remains. Well-defined independent of join order; pairs are
// processed in lexicographic order for reproducible traces.
Graph l_closure(const Graph& g, int l);

// Closure whose fixed point decides the 1-factor (l = n-1).
Graph closure_for_one_factor(const Graph& g);

// Closure whose fixed point decides the k-factor, k >= 2 (l = n+2k-4).
Graph closure_for_k_factor(const Graph& g, int k);

// Closure whose fixed point decides the spanning k-tree of an m-connected
// graph (l = n-(k-2)m-1).
Graph closure_for_spanning_k_tree(const Graph& g, int k, int m);

}  // namespace spanfactor
