#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spanfactor/graph.hpp"

namespace spanfactor {

struct FactorCertificate {
    int k;
    std::vector<std::pair<int, int>> edges;  // spanning k-regular subgraph, u < v, sorted
};

// k-factor decision by reduction to perfect matching: each vertex v becomes a
// gadget of d(v) external nodes (one per incident edge) and d(v)-k internal
// nodes joined completely to the externals; each original edge links the two
// dedicated external nodes. A perfect matching of the gadget leaves exactly k
// externals per vertex matched across, and those cross edges form the factor.
// Fast negatives: n*k odd or min degree < k. The certificate is validated
// (k-regular, spanning, edges in host) before returning.
std::optional<FactorCertificate> has_k_factor(const Graph& g, int k);

// Independent oracle: enumerate all 2^e spanning subgraphs and test
// k-regularity. Requires e(G) <= 24.
std::optional<FactorCertificate> brute_force_k_factor(const Graph& g, int k);

}  // namespace spanfactor
