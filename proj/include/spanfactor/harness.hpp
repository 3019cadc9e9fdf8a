#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spanfactor/graph.hpp"
#include "spanfactor/spanning_tree.hpp"
#include "spanfactor/thresholds.hpp"

namespace spanfactor {

struct TheoremParams {
    int n = 0;
    int r = 0;
    int k = 0;
    int m = 0;
    int delta = 0;
    int s = 0;
    int q = 0;
};

// Suite identifiers accepted by verify():
//   T13i / T13ii   clique-count condition for a 1-factor / k-factor
//   C15i / C15ii   edge-count condition for a 1-factor / k-factor
//   C18i / C18ii   spectral-radius condition for a 1-factor / k-factor
//   T110           spectral condition for a spanning k-tree (m-connected)
//   T113           spectral condition for bounded leaf degree
//   EQ-T12         closure equivalence for factors
//   EQ-T19         closure equivalence for spanning k-trees
//   EQ-T111        subset criterion <=> bounded-leaf-degree tree
//   BND-L27        min-degree spectral upper bound
//   BND-L33        edge-count spectral upper bound (connected)
//   FACT21         clique-count bound under the (s,q) low-degree property
struct TheoremSpec {
    std::string id;
    TheoremParams params;
};

struct VerificationReport {
    TheoremSpec spec;
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_hits = 0;
    std::uint64_t conclusion_hits = 0;
    std::uint64_t exceptional_hits = 0;
    std::uint64_t budget_hits = 0;
    std::vector<std::string> counterexamples;  // graph6, sorted
    std::vector<std::string> budget_graphs;    // graph6, sorted
    double wall_time_seconds = 0.0;
};

struct EnumerationFilters {
    bool connected = false;
    int min_degree = 0;
    std::optional<int> nk_even_k;  // when set, yield nothing unless n*k is even
};

// Every labeled graph on n vertices passing the filters, in ascending
// edge-mask order. Exhaustive mode is capped at n <= 8.
void enumerate_labeled(int n, const EnumerationFilters& filters,
                       const std::function<void(const Graph&)>& fn);

// count independently seeded Bernoulli(p) graphs; reproducible per seed and
// index, so streams can be partitioned.
void sample_random(int n, double edge_probability, std::uint64_t count, std::uint64_t seed,
                   const std::function<void(const Graph&)>& fn);

struct GraphSource {
    enum class Kind { Exhaustive, Random, File } kind = Kind::Exhaustive;
    int n = 0;
    std::uint64_t count = 0;  // random
    double p = 0.5;           // random
    std::uint64_t seed = 0;   // random
    std::string path;         // file ("-" reads stdin)
};

GraphSource parse_source(const std::string& text, int n, std::uint64_t seed);

struct VerifyOptions {
    std::uint64_t budget = kDefaultSearchBudget;
    int threads = 0;  // 0 = hardware concurrency
    double tol = 1e-10;
};

// Scan the source, evaluate the suite's hypothesis and conclusion on every
// graph, and aggregate. Parameter-range violations throw std::domain_error
// before any graph is scanned. Deterministic: counters are order-insensitive
// and graph lists are sorted.
VerificationReport verify(const TheoremSpec& spec, const GraphSource& source,
                          const VerifyOptions& options = {});

// Tightness suite around an extremal family: the family member itself must
// fail its property; every single-edge augmentation must satisfy it and raise
// the spectral radius by more than 1e-8; every single-edge deletion must
// lower the spectral radius by more than 1e-8.
VerificationReport perturbation_suite(const std::string& family, const FamilyParams& params,
                                      const VerifyOptions& options = {});

// "json" (stable field order) or "csv" (fixed header); floating values carry
// 12 significant digits.
std::string report_emit(const VerificationReport& report, const std::string& format);

}  // namespace spanfactor
