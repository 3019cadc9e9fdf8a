#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spanfactor/graph.hpp"

namespace spanfactor {

struct TreeCertificate {
    std::vector<std::pair<int, int>> edges;  // n-1 host edges, u < v, sorted
};

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct TreeSearchResult {
    SearchStatus status;
    std::optional<TreeCertificate> tree;  // set iff status == Found
    std::uint64_t nodes_explored;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Complete backtracking search for a spanning tree with maximum degree <= k.
// Binary include/exclude branching on one frontier edge at a time, with
// capacity-seeded reachability and pigeonhole prunes; "budget exceeded" is a
// third outcome, never conflated with "no". Requires g connected, k >= 2,
// n <= 24.
TreeSearchResult has_spanning_k_tree(const Graph& g, int k,
                                     std::uint64_t budget = kDefaultSearchBudget);

// Maximum over vertices of the number of degree-1 tree neighbors. Validates
// the tree axioms; defined as 1 for the two-vertex tree.
int leaf_degree(const TreeCertificate& t, int n);

struct SubsetCertificate {
    VertexSet s;
    int isolated_after;  // i(G - S)
};

// Kaneko criterion scan: returns nullopt when every nonempty S satisfies
// i(G-S) < (k+1)|S|, otherwise a violating S of minimum cardinality
// (subsets scanned in increasing popcount order). Requires g connected,
// n <= 24, k >= 1.
std::optional<SubsetCertificate> kaneko_check(const Graph& g, int k);

// Complete backtracking search for a spanning tree with leaf degree <= k.
// Requires g connected, n <= 20, k >= 1.
TreeSearchResult has_spanning_tree_leaf_deg(const Graph& g, int k,
                                            std::uint64_t budget = kDefaultSearchBudget);

struct MinMaxDegree {
    int degree;
    TreeCertificate tree;
};

// Minimum over spanning trees of the maximum degree, with an achieving tree;
// binary search on k over has_spanning_k_tree. Requires g connected, n <= 20.
// Throws if the search budget is exhausted.
MinMaxDegree spanning_tree_min_max_degree(const Graph& g,
                                          std::uint64_t budget = kDefaultSearchBudget);

}  // namespace spanfactor
