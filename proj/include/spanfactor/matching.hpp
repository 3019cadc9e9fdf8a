#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spanfactor/graph.hpp"

namespace spanfactor {

struct Matching {
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    int size() const { return static_cast<int>(edges.size()); }
};

// Maximum-cardinality matching on an adjacency-list graph via augmenting
// paths with blossom contraction. Returns the mate array (-1 = unmatched).
// Deterministic: vertices and neighbors are scanned in index order.
std::vector<int> maximum_matching_mates(const std::vector<std::vector<int>>& adj);

Matching max_matching(const Graph& g);

// Perfect matching if one exists (n even and max matching saturates).
std::optional<Matching> has_one_factor(const Graph& g);

}  // namespace spanfactor
