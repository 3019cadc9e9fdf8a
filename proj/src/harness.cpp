#include "spanfactor/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "spanfactor/cliques.hpp"
#include "spanfactor/closure.hpp"
#include "spanfactor/factors.hpp"
#include "spanfactor/matching.hpp"
#include "spanfactor/spectral.hpp"

namespace spanfactor {

namespace {

constexpr std::size_t kListCap = 1000;  // counterexample/budget lists are sorted then truncated

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct PairTable {
    int count = 0;
    std::pair<int, int> pairs[kMaxVertices * (kMaxVertices - 1) / 2];
    explicit PairTable(int n) {
        for (int u = 0; u + 1 < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs[count++] = {u, v};
    }
};

Graph graph_from_mask(int n, const PairTable& table, std::uint64_t mask) {
    Graph g(n);
    std::uint64_t m = mask;
    while (m) {
        const int i = std::countr_zero(m);
        m &= m - 1;
        g.add_edge(table.pairs[i].first, table.pairs[i].second);
    }
    return g;
}

Graph random_graph(int n, const PairTable& table, double p, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 eng(splitmix64(seed ^ splitmix64(index + 1)));
    Graph g(n);
    for (int i = 0; i < table.count; ++i) {
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        if (u < p) g.add_edge(table.pairs[i].first, table.pairs[i].second);
    }
    return g;
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

void enumerate_labeled(int n, const EnumerationFilters& filters,
                       const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 8) throw std::invalid_argument("exhaustive enumeration capped at n <= 8");
    if (filters.nk_even_k &&
        (static_cast<long long>(n) * *filters.nk_even_k) % 2 != 0)
        return;
    const PairTable table(n);
    const std::uint64_t total = std::uint64_t{1} << table.count;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Graph g = graph_from_mask(n, table, mask);
        if (filters.min_degree > 0 && g.min_degree() < filters.min_degree) continue;
        if (filters.connected && !g.is_connected()) continue;
        fn(g);
    }
}

void sample_random(int n, double edge_probability, std::uint64_t count, std::uint64_t seed,
                   const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("order out of range");
    if (!(edge_probability > 0.0) || edge_probability > 1.0)
        throw std::invalid_argument("edge probability must be in (0, 1]");
    const PairTable table(n);
    for (std::uint64_t i = 0; i < count; ++i) fn(random_graph(n, table, edge_probability, seed, i));
}

GraphSource parse_source(const std::string& text, int n, std::uint64_t seed) {
    GraphSource src;
    src.n = n;
    src.seed = seed;
    if (text == "exhaustive") {
        src.kind = GraphSource::Kind::Exhaustive;
        return src;
    }
    if (text.rfind("random:", 0) == 0) {
        src.kind = GraphSource::Kind::Random;
        const std::string rest = text.substr(7);
        const std::size_t colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("random source needs random:<count>:<p>");
        src.count = std::stoull(rest.substr(0, colon));
        src.p = std::stod(rest.substr(colon + 1));
        return src;
    }
    if (text.rfind("file:", 0) == 0) {
        src.kind = GraphSource::Kind::File;
        src.path = text.substr(5);
        return src;
    }
    throw std::invalid_argument("unknown source: " + text);
}

// ---------------------------------------------------------------------------
// Theorem evaluation

namespace {

enum class Outcome { Skip, Conclusion, Exceptional, Counterexample, Budget };

enum class TheoremId {
    T13i,
    T13ii,
    C15i,
    C15ii,
    C18i,
    C18ii,
    T110,
    T113,
    EqT12,
    EqT19,
    EqT111,
    BndL27,
    BndL33,
    Fact21,
};

TheoremId parse_theorem_id(const std::string& id) {
    if (id == "T13i") return TheoremId::T13i;
    if (id == "T13ii") return TheoremId::T13ii;
    if (id == "C15i") return TheoremId::C15i;
    if (id == "C15ii") return TheoremId::C15ii;
    if (id == "C18i") return TheoremId::C18i;
    if (id == "C18ii") return TheoremId::C18ii;
    if (id == "T110") return TheoremId::T110;
    if (id == "T113") return TheoremId::T113;
    if (id == "EQ-T12") return TheoremId::EqT12;
    if (id == "EQ-T19") return TheoremId::EqT19;
    if (id == "EQ-T111") return TheoremId::EqT111;
    if (id == "BND-L27") return TheoremId::BndL27;
    if (id == "BND-L33") return TheoremId::BndL33;
    if (id == "FACT21") return TheoremId::Fact21;
    throw std::domain_error("unknown theorem id: " + id);
}

struct TheoremContext {
    TheoremSpec spec;
    TheoremId id;
    VerifyOptions opts;
    std::int64_t clique_threshold = 0;
    std::int64_t edge_threshold = 0;
    double spectral_threshold = 0.0;
    double rho_extremal = 0.0;
    std::optional<Graph> family_a;  // exceptional families for isomorphism tests
    std::optional<Graph> family_b;
    int min_edges_cull = 0;  // mask-level popcount rejection (exhaustive source)
};

void require_range(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error("hypothesis range violated: " + what);
}

int ceil_div(long long num, long long den) {
    return static_cast<int>((num + den - 1) / den);
}

TheoremContext build_context(const TheoremSpec& spec, const VerifyOptions& opts) {
    TheoremContext ctx;
    ctx.spec = spec;
    ctx.id = parse_theorem_id(spec.id);
    ctx.opts = opts;
    const auto& p = spec.params;
    const std::string& id = spec.id;
    require_range(p.n >= 1 && p.n <= kMaxVertices, "n must be in 1..64");

    auto one_factor_families = [&] {
        ctx.family_a = ex_1f_a(p.n, p.delta);
        ctx.family_b = ex_1f_b(p.n, p.delta);
    };
    auto cull_from_cliques = [&](std::int64_t threshold, int r) {
        std::int64_t e = 0;
        while (max_cliques_with_edges(e, r) <= threshold) ++e;
        ctx.min_edges_cull = static_cast<int>(e);
    };

    if (id == "T13i") {
        require_range(p.r >= 2, "r >= 2");
        require_range(p.n % 2 == 0, "n even (nk even with k = 1)");
        require_range(p.delta >= 1 && p.delta <= p.n / 2 - 1, "1 <= delta <= n/2-1");
        require_range(p.n >= 2 * p.delta + 2, "n >= 2delta+k+1");
        ctx.clique_threshold = clique_threshold_1f(p.n, p.r, p.delta).value;
        one_factor_families();
        cull_from_cliques(ctx.clique_threshold, p.r);
    } else if (id == "T13ii") {
        require_range(p.r >= 2, "r >= 2");
        require_range(p.k >= 2, "k >= 2");
        require_range((static_cast<long long>(p.n) * p.k) % 2 == 0, "nk even");
        require_range(p.delta >= 2 * p.k - 2 && 2 * p.delta <= p.n + 2 * p.k - 5,
                      "2k-2 <= delta <= (n+2k-5)/2");
        require_range(p.n >= 2 * p.delta + p.k + 1, "n >= 2delta+k+1");
        ctx.clique_threshold = clique_threshold_kf(p.n, p.r, p.k, p.delta).value;
        cull_from_cliques(ctx.clique_threshold, p.r);
    } else if (id == "C15i") {
        require_range(p.n % 2 == 0, "n even");
        require_range(p.delta >= 1 && p.delta <= p.n / 2 - 1, "1 <= delta <= n/2-1");
        require_range(p.n >= 6 * p.delta + 10, "n >= 6delta+10");
        ctx.edge_threshold = phi(p.n, 2, p.delta + 1);
        one_factor_families();
        ctx.min_edges_cull = static_cast<int>(ctx.edge_threshold + 1);
    } else if (id == "C15ii") {
        require_range(p.k >= 2, "k >= 2");
        require_range((static_cast<long long>(p.n) * p.k) % 2 == 0, "nk even");
        require_range(p.delta >= 2 * p.k - 2 && 2 * p.delta <= p.n + 2 * p.k - 5,
                      "2k-2 <= delta <= (n+2k-5)/2");
        require_range(p.n >= 6 * p.delta + 4 * p.k - 3, "n >= 6delta+4k-3");
        ctx.edge_threshold = psi(p.n, 2, p.k, p.delta + 1);
        ctx.min_edges_cull = static_cast<int>(ctx.edge_threshold + 1);
    } else if (id == "C18i") {
        require_range(p.n % 2 == 0, "n even");
        ctx.spectral_threshold = spectral_threshold_1f(p.n, p.delta);
        one_factor_families();
    } else if (id == "C18ii") {
        require_range(p.k >= 2, "k >= 2");
        require_range((static_cast<long long>(p.n) * p.k) % 2 == 0, "nk even");
        ctx.spectral_threshold = spectral_threshold_kf(p.n, p.k, p.delta);
    } else if (id == "T110") {
        require_range(p.m >= 1 && p.k >= 2, "m >= 1 and k >= 2");
        const int n_min = std::max((7 * p.k - 2) * p.m + 4,
                                   ceil_div(2LL * (p.k - 1) * p.m * p.m + (3LL * p.k + 1) * p.m + 9, 2));
        require_range(p.n >= n_min, "n >= max{(7k-2)m+4, (k-1)m^2+(3k+1)m/2+9/2}");
        require_range(p.n <= 24, "n <= 24 (spanning-tree decider cap)");
        ctx.family_a = ex_ktree(p.n, p.m, p.k);
        ctx.rho_extremal = spectral_radius(*ctx.family_a, opts.tol);
    } else if (id == "T113") {
        require_range(p.k >= 1 && p.delta >= 1, "k >= 1 and delta >= 1");
        require_range(p.n >= 3 * (p.k + 2) * p.delta + 2, "n >= 3(k+2)delta+2");
        require_range(p.n <= 20, "n <= 20 (leaf-degree decider cap)");
        ctx.family_a = ex_leaf(p.n, p.delta, p.k);
        ctx.rho_extremal = spectral_radius(*ctx.family_a, opts.tol);
    } else if (id == "EQ-T12") {
        require_range(p.k >= 1 && p.k < p.n, "1 <= k < n");
    } else if (id == "EQ-T19") {
        require_range(p.m >= 1 && p.k >= 2, "m >= 1 and k >= 2");
        require_range(p.n >= p.k + 1, "n >= k+1");
        require_range(p.n <= 24, "n <= 24 (spanning-tree decider cap)");
    } else if (id == "EQ-T111") {
        require_range(p.k >= 1, "k >= 1");
        require_range(p.n <= 20, "n <= 20 (leaf-degree decider cap)");
    } else if (id == "BND-L27" || id == "BND-L33") {
        // no parameters beyond n
    } else if (id == "FACT21") {
        require_range(p.s >= 1 && p.q >= 0 && p.r >= 1, "s >= 1, q >= 0, r >= 1");
        require_range(p.n >= p.s + p.q, "n >= s+q");
    } else {
        throw std::domain_error("unknown theorem id: " + spec.id);
    }
    return ctx;
}

bool certificate_holds_in(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    for (auto [u, v] : edges)
        if (!g.adjacent(u, v)) return false;
    return true;
}

Outcome evaluate_one_factor_family(const TheoremContext& ctx, const Graph& g) {
    if (has_one_factor(g)) return Outcome::Conclusion;
    const Graph closure = closure_for_one_factor(g);
    if (ctx.spec.params.delta % 2 == 0 && is_isomorphic(closure, *ctx.family_a))
        return Outcome::Exceptional;
    if (is_isomorphic(closure, *ctx.family_b)) return Outcome::Exceptional;
    return Outcome::Counterexample;
}

Outcome evaluate(const TheoremContext& ctx, const Graph& g) {
    const auto& p = ctx.spec.params;
    const TheoremId id = ctx.id;

    if (id == TheoremId::T13i) {
        if (g.min_degree() < p.delta) return Outcome::Skip;
        if (count_cliques(g, p.r) <= ctx.clique_threshold) return Outcome::Skip;
        return evaluate_one_factor_family(ctx, g);
    }
    if (id == TheoremId::T13ii) {
        if (g.min_degree() < p.delta) return Outcome::Skip;
        if (count_cliques(g, p.r) <= ctx.clique_threshold) return Outcome::Skip;
        return has_k_factor(g, p.k) ? Outcome::Conclusion : Outcome::Counterexample;
    }
    if (id == TheoremId::C15i) {
        if (g.min_degree() < p.delta || g.edge_count() <= ctx.edge_threshold) return Outcome::Skip;
        return evaluate_one_factor_family(ctx, g);
    }
    if (id == TheoremId::C15ii) {
        if (g.min_degree() < p.delta || g.edge_count() <= ctx.edge_threshold) return Outcome::Skip;
        return has_k_factor(g, p.k) ? Outcome::Conclusion : Outcome::Counterexample;
    }
    if (id == TheoremId::C18i) {
        if (g.min_degree() < p.delta) return Outcome::Skip;
        if (!(spectral_radius(g, ctx.opts.tol) > ctx.spectral_threshold)) return Outcome::Skip;
        return evaluate_one_factor_family(ctx, g);
    }
    if (id == TheoremId::C18ii) {
        if (g.min_degree() < p.delta) return Outcome::Skip;
        if (!(spectral_radius(g, ctx.opts.tol) > ctx.spectral_threshold)) return Outcome::Skip;
        return has_k_factor(g, p.k) ? Outcome::Conclusion : Outcome::Counterexample;
    }
    if (id == TheoremId::T110) {
        if (!g.is_connected() || vertex_connectivity(g) < p.m) return Outcome::Skip;
        if (spectral_radius(g, ctx.opts.tol) < ctx.rho_extremal - 1e-9) return Outcome::Skip;
        const TreeSearchResult r = has_spanning_k_tree(g, p.k, ctx.opts.budget);
        if (r.status == SearchStatus::BudgetExceeded) return Outcome::Budget;
        if (r.status == SearchStatus::Found) return Outcome::Conclusion;
        return is_isomorphic(g, *ctx.family_a) ? Outcome::Exceptional : Outcome::Counterexample;
    }
    if (id == TheoremId::T113) {
        if (!g.is_connected() || g.min_degree() < p.delta) return Outcome::Skip;
        if (spectral_radius(g, ctx.opts.tol) < ctx.rho_extremal - 1e-9) return Outcome::Skip;
        const TreeSearchResult r = has_spanning_tree_leaf_deg(g, p.k, ctx.opts.budget);
        if (r.status == SearchStatus::BudgetExceeded) return Outcome::Budget;
        if (r.status == SearchStatus::Found) return Outcome::Conclusion;
        return is_isomorphic(g, *ctx.family_a) ? Outcome::Exceptional : Outcome::Counterexample;
    }
    if (id == TheoremId::EqT12) {
        const Graph closure = p.k == 1 ? closure_for_one_factor(g) : closure_for_k_factor(g, p.k);
        if (p.k == 1) {
            if (const auto m = has_one_factor(g))
                return certificate_holds_in(closure, m->edges) ? Outcome::Conclusion
                                                               : Outcome::Counterexample;
            return has_one_factor(closure) ? Outcome::Counterexample : Outcome::Conclusion;
        }
        if (const auto f = has_k_factor(g, p.k))
            return certificate_holds_in(closure, f->edges) ? Outcome::Conclusion
                                                           : Outcome::Counterexample;
        return has_k_factor(closure, p.k) ? Outcome::Counterexample : Outcome::Conclusion;
    }
    if (id == TheoremId::EqT19) {
        if (!g.is_connected()) return Outcome::Skip;
        if (p.m >= 2 && vertex_connectivity(g) < p.m) return Outcome::Skip;
        const TreeSearchResult a = has_spanning_k_tree(g, p.k, ctx.opts.budget);
        if (a.status == SearchStatus::BudgetExceeded) return Outcome::Budget;
        const Graph closure = closure_for_spanning_k_tree(g, p.k, p.m);
        if (a.status == SearchStatus::Found)
            return certificate_holds_in(closure, a.tree->edges) ? Outcome::Conclusion
                                                                : Outcome::Counterexample;
        const TreeSearchResult b = has_spanning_k_tree(closure, p.k, ctx.opts.budget);
        if (b.status == SearchStatus::BudgetExceeded) return Outcome::Budget;
        return b.status == SearchStatus::Found ? Outcome::Counterexample : Outcome::Conclusion;
    }
    if (id == TheoremId::EqT111) {
        if (!g.is_connected()) return Outcome::Skip;
        const auto violator = kaneko_check(g, p.k);
        const TreeSearchResult t = has_spanning_tree_leaf_deg(g, p.k, ctx.opts.budget);
        if (t.status == SearchStatus::BudgetExceeded) return Outcome::Budget;
        const bool tree_exists = t.status == SearchStatus::Found;
        return tree_exists == !violator.has_value() ? Outcome::Conclusion : Outcome::Counterexample;
    }
    if (id == TheoremId::BndL27) {
        const double rho = spectral_radius(g, ctx.opts.tol);
        return hong_shu_fang_bound(g) - rho >= -1e-9 ? Outcome::Conclusion : Outcome::Counterexample;
    }
    if (id == TheoremId::BndL33) {
        if (!g.is_connected()) return Outcome::Skip;
        const double rho = spectral_radius(g, ctx.opts.tol);
        return hong_bound(g) - rho >= -1e-9 ? Outcome::Conclusion : Outcome::Counterexample;
    }
    if (id == TheoremId::Fact21) {
        if (!posa_property(g, PosaQuery{p.s, p.q})) return Outcome::Skip;
        return count_cliques(g, p.r) <= posa_clique_bound(p.n, p.s, p.q, p.r)
                   ? Outcome::Conclusion
                   : Outcome::Counterexample;
    }
    throw std::logic_error("unhandled theorem id");
}

struct PartialReport {
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_hits = 0;
    std::uint64_t conclusion_hits = 0;
    std::uint64_t exceptional_hits = 0;
    std::uint64_t budget_hits = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> budget_graphs;

    void absorb(const TheoremContext& ctx, const Graph& g) {
        ++scanned;
        const Outcome o = evaluate(ctx, g);
        if (o == Outcome::Skip) return;
        ++hypothesis_hits;
        switch (o) {
            case Outcome::Conclusion: ++conclusion_hits; break;
            case Outcome::Exceptional: ++exceptional_hits; break;
            case Outcome::Budget:
                ++budget_hits;
                if (budget_graphs.size() < kListCap) budget_graphs.push_back(graph6_encode(g));
                break;
            case Outcome::Counterexample:
                if (counterexamples.size() < kListCap) counterexamples.push_back(graph6_encode(g));
                break;
            case Outcome::Skip: break;
        }
    }

    void merge(PartialReport&& other) {
        scanned += other.scanned;
        hypothesis_hits += other.hypothesis_hits;
        conclusion_hits += other.conclusion_hits;
        exceptional_hits += other.exceptional_hits;
        budget_hits += other.budget_hits;
        counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                               other.counterexamples.end());
        budget_graphs.insert(budget_graphs.end(), other.budget_graphs.begin(),
                             other.budget_graphs.end());
    }
};

void scan_exhaustive(const TheoremContext& ctx, int n, PartialReport& out, int threads) {
    const PairTable table(n);
    if (n > 8) throw std::invalid_argument("exhaustive source capped at n <= 8");
    const std::uint64_t total = std::uint64_t{1} << table.count;
    const int workers = std::min<std::uint64_t>(thread_count(threads), total);
    std::vector<PartialReport> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const int cull = ctx.min_edges_cull;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            PartialReport& local = parts[static_cast<std::size_t>(w)];
            const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
            const std::uint64_t hi = lo + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                if (cull > 0 && std::popcount(mask) < cull) {
                    ++local.scanned;
                    continue;
                }
                local.absorb(ctx, graph_from_mask(n, table, mask));
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts) out.merge(std::move(part));
}

void scan_random(const TheoremContext& ctx, const GraphSource& src, PartialReport& out, int threads) {
    const PairTable table(src.n);
    const std::uint64_t total = src.count;
    const int workers = static_cast<int>(std::min<std::uint64_t>(thread_count(threads), std::max<std::uint64_t>(total, 1)));
    std::vector<PartialReport> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            PartialReport& local = parts[static_cast<std::size_t>(w)];
            for (std::uint64_t i = w; i < total; i += static_cast<std::uint64_t>(workers))
                local.absorb(ctx, random_graph(src.n, table, src.p, src.seed, i));
        });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts) out.merge(std::move(part));
}

void scan_file(const TheoremContext& ctx, const GraphSource& src, PartialReport& out) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (src.path != "-") {
        file.open(src.path);
        if (!file) throw std::invalid_argument("cannot open " + src.path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        const Graph g = graph6_decode(line);
        if (g.order() != src.n)
            throw std::invalid_argument("graph order in file does not match --n");
        out.absorb(ctx, g);
    }
}

}  // namespace

VerificationReport verify(const TheoremSpec& spec, const GraphSource& source,
                          const VerifyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const TheoremContext ctx = build_context(spec, options);
    PartialReport partial;
    switch (source.kind) {
        case GraphSource::Kind::Exhaustive:
            scan_exhaustive(ctx, source.n, partial, options.threads);
            break;
        case GraphSource::Kind::Random:
            scan_random(ctx, source, partial, options.threads);
            break;
        case GraphSource::Kind::File:
            scan_file(ctx, source, partial);
            break;
    }
    VerificationReport report;
    report.spec = spec;
    report.scanned = partial.scanned;
    report.hypothesis_hits = partial.hypothesis_hits;
    report.conclusion_hits = partial.conclusion_hits;
    report.exceptional_hits = partial.exceptional_hits;
    report.budget_hits = partial.budget_hits;
    report.counterexamples = std::move(partial.counterexamples);
    report.budget_graphs = std::move(partial.budget_graphs);
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    std::sort(report.budget_graphs.begin(), report.budget_graphs.end());
    if (report.counterexamples.size() > kListCap) report.counterexamples.resize(kListCap);
    if (report.budget_graphs.size() > kListCap) report.budget_graphs.resize(kListCap);
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

// ---------------------------------------------------------------------------
// Perturbation suites

namespace {

enum class PropertyAnswer { Yes, No, Budget };

PropertyAnswer family_property(const std::string& family, const FamilyParams& p, const Graph& g,
                               const VerifyOptions& opts) {
    if (family == "exktree" || family == "exfan") {
        if (!g.is_connected()) return PropertyAnswer::No;
        const TreeSearchResult r = has_spanning_k_tree(g, p.k, opts.budget);
        if (r.status == SearchStatus::BudgetExceeded) return PropertyAnswer::Budget;
        return r.status == SearchStatus::Found ? PropertyAnswer::Yes : PropertyAnswer::No;
    }
    if (family == "exleaf") {
        if (!g.is_connected()) return PropertyAnswer::No;
        // Dual route: the subset criterion and the tree search must agree.
        const auto violator = kaneko_check(g, p.k);
        const TreeSearchResult r = has_spanning_tree_leaf_deg(g, p.k, opts.budget);
        if (r.status == SearchStatus::BudgetExceeded) return PropertyAnswer::Budget;
        const bool found = r.status == SearchStatus::Found;
        if (found != !violator.has_value())
            throw std::logic_error("subset criterion disagrees with tree search");
        return found ? PropertyAnswer::Yes : PropertyAnswer::No;
    }
    if (family == "ex1fa" || family == "ex1fb")
        return has_one_factor(g) ? PropertyAnswer::Yes : PropertyAnswer::No;
    throw std::invalid_argument("perturbation suite undefined for family " + family);
}

}  // namespace

VerificationReport perturbation_suite(const std::string& family, const FamilyParams& params,
                                      const VerifyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const Graph base = make_family(family, params);
    const double rho_base = spectral_radius(base, options.tol);
    VerificationReport report;
    report.spec.id = "PERTURB:" + family;
    report.spec.params.n = base.order();
    report.spec.params.k = params.k;
    report.spec.params.m = params.m;
    report.spec.params.delta = params.delta;

    auto fail = [&](const Graph& g) {
        if (report.counterexamples.size() < kListCap)
            report.counterexamples.push_back(graph6_encode(g));
    };
    auto judge = [&](const Graph& g, bool expect_property, bool check_property, bool is_base,
                     bool rho_up) {
        ++report.scanned;
        ++report.hypothesis_hits;
        if (check_property) {
            const PropertyAnswer a = family_property(family, params, g, options);
            if (a == PropertyAnswer::Budget) {
                ++report.budget_hits;
                if (report.budget_graphs.size() < kListCap)
                    report.budget_graphs.push_back(graph6_encode(g));
                return;
            }
            if ((a == PropertyAnswer::Yes) != expect_property) {
                fail(g);
                return;
            }
        }
        if (!is_base) {
            const double rho = spectral_radius(g, options.tol);
            if (!(rho_up ? rho > rho_base + 1e-8 : rho < rho_base - 1e-8)) {
                fail(g);
                return;
            }
        }
        ++report.conclusion_hits;
    };

    // (a) the extremal graph itself must fail the property
    judge(base, false, true, true, false);
    // (b) every single-edge augmentation satisfies the property and raises rho
    const int n = base.order();
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (base.adjacent(u, v)) continue;
            Graph g = base;
            g.add_edge(u, v);
            judge(g, true, true, false, true);
        }
    // (c) every single-edge deletion lowers rho
    for (auto [u, v] : base.edges()) {
        Graph g = base;
        g.remove_edge(u, v);
        judge(g, false, false, false, false);
    }

    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    std::sort(report.budget_graphs.begin(), report.budget_graphs.end());
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

// ---------------------------------------------------------------------------
// Report serialization

namespace {

double round12(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

}  // namespace

std::string report_emit(const VerificationReport& report, const std::string& format) {
    const auto& p = report.spec.params;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["theorem"] = report.spec.id;
        j["params"] = {{"n", p.n},     {"r", p.r}, {"k", p.k}, {"m", p.m},
                       {"delta", p.delta}, {"s", p.s}, {"q", p.q}};
        j["scanned"] = report.scanned;
        j["hypothesis_hits"] = report.hypothesis_hits;
        j["conclusion_hits"] = report.conclusion_hits;
        j["exceptional_hits"] = report.exceptional_hits;
        j["budget_hits"] = report.budget_hits;
        j["counterexamples"] = report.counterexamples;
        j["budget_graphs"] = report.budget_graphs;
        j["wall_time_s"] = round12(report.wall_time_seconds);
        return j.dump();
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "theorem,n,r,k,m,delta,s,q,scanned,hypothesis_hits,conclusion_hits,"
               "exceptional_hits,budget_hits,counterexamples,budget_graphs,wall_time_s\n";
        auto join = [](const std::vector<std::string>& items) {
            std::string s;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i) s += ';';
                s += items[i];
            }
            return s;
        };
        char wall[64];
        std::snprintf(wall, sizeof wall, "%.12g", report.wall_time_seconds);
        out << report.spec.id << ',' << p.n << ',' << p.r << ',' << p.k << ',' << p.m << ','
            << p.delta << ',' << p.s << ',' << p.q << ',' << report.scanned << ','
            << report.hypothesis_hits << ',' << report.conclusion_hits << ','
            << report.exceptional_hits << ',' << report.budget_hits << ",\""
            << join(report.counterexamples) << "\",\"" << join(report.budget_graphs) << "\","
            << wall << '\n';
        return out.str();
    }
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace spanfactor
