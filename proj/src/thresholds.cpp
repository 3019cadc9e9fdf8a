#include "spanfactor/thresholds.hpp"

#include <cmath>
#include <stdexcept>

#include "spanfactor/cliques.hpp"

namespace spanfactor {

std::int64_t phi(int n, int r, int q) {
    if (r < 2) throw std::domain_error("phi requires r >= 2");
    if (q < 0 || q > n - 1) throw std::domain_error("phi requires 0 <= q <= n-1");
    return binomial(n - q - 1, r) + static_cast<std::int64_t>(q + 1) * binomial(q, r - 1);
}

std::int64_t psi(int n, int r, int k, int q) {
    if (r < 2) throw std::domain_error("psi requires r >= 2");
    if (k < 2) throw std::domain_error("psi requires k >= 2");
    if (q < 2 * k - 4) throw std::domain_error("psi requires q >= 2k-4");
    return binomial(n - q + 2 * k - 4, r) +
           static_cast<std::int64_t>(q - 2 * k + 4) * binomial(q, r - 1);
}

double spectral_threshold_1f(int n, int delta) {
    if (delta < 1 || 2 * delta > n - 2)
        throw std::domain_error("spectral_threshold_1f requires 1 <= delta <= n/2-1");
    if (n < 6 * delta + 10) throw std::domain_error("spectral_threshold_1f requires n >= 6delta+10");
    const double dn = n, dd = delta;
    const double radicand =
        dn * dn - (3.0 * dd + 5.0) * dn + (13.0 * dd * dd + 23.0 * dd + 41.0) / 4.0;
    return (dd - 1.0) / 2.0 + std::sqrt(radicand);
}

double spectral_threshold_kf(int n, int k, int delta) {
    if (k < 2) throw std::domain_error("spectral_threshold_kf requires k >= 2");
    if (delta < 2 * k - 2 || 2 * delta > n + 2 * k - 5)
        throw std::domain_error("spectral_threshold_kf requires 2k-2 <= delta <= (n+2k-5)/2");
    if (n < 6 * delta + 4 * k - 3)
        throw std::domain_error("spectral_threshold_kf requires n >= 6delta+4k-3");
    const double dn = n, dd = delta, dk = k;
    const double radicand =
        dn * dn - (3.0 * dd - 4.0 * dk + 11.0) * dn +
        (13.0 * dd * dd - (32.0 * dk - 94.0) * dd + 16.0 * dk * dk - 104.0 * dk + 161.0) / 4.0;
    return (dd - 1.0) / 2.0 + std::sqrt(radicand);
}

namespace {

CliqueThreshold pick(std::int64_t low, std::int64_t high) {
    CliqueThreshold t{};
    t.low_branch = low;
    t.high_branch = high;
    t.value = low > high ? low : high;
    t.winner = low > high ? "delta" : (high > low ? "half" : "tie");
    return t;
}

}  // namespace

CliqueThreshold clique_threshold_1f(int n, int r, int delta) {
    if (n % 2 != 0) throw std::domain_error("clique_threshold_1f requires even n");
    if (delta < 1 || delta > n / 2 - 1)
        throw std::domain_error("clique_threshold_1f requires 1 <= delta <= n/2-1");
    return pick(phi(n, r, delta + 1), phi(n, r, n / 2 - 1));
}

CliqueThreshold clique_threshold_kf(int n, int r, int k, int delta) {
    if (k < 2) throw std::domain_error("clique_threshold_kf requires k >= 2");
    const int top = (n + 2 * k - 5) / 2;
    if (delta < 2 * k - 2 || delta > top)
        throw std::domain_error("clique_threshold_kf requires 2k-2 <= delta <= (n+2k-5)/2");
    return pick(psi(n, r, k, delta + 1), psi(n, r, k, top));
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

Graph three_part(int hub, int clique, int indep) {
    require(hub >= 1 && clique >= 1 && indep >= 0, "three-part family needs hub >= 1, clique >= 1, indep >= 0");
    require(hub + clique + indep <= kMaxVertices, "three-part family exceeds 64 vertices");
    if (indep == 0) return join(complete_graph(hub), complete_graph(clique));
    return join(complete_graph(hub), disjoint_union(complete_graph(clique), empty_graph(indep)));
}

}  // namespace

Graph ex_1f_a(int n, int delta) {
    require(delta >= 0 && n - delta - 1 >= 1 && delta + 1 >= 1 && n <= kMaxVertices,
            "ex_1f_a part sizes invalid");
    return disjoint_union(complete_graph(n - delta - 1), complete_graph(delta + 1));
}

Graph ex_1f_b(int n, int delta) {
    require(delta >= 1 && n - 2 * delta - 1 >= 1, "ex_1f_b part sizes invalid");
    return three_part(delta, n - 2 * delta - 1, delta + 1);
}

Graph ex_ktree(int n, int m, int k) {
    require(m >= 1 && k >= 2 && n - k * m - 1 >= 1, "ex_ktree part sizes invalid");
    return three_part(m, n - k * m - 1, k * m - m + 1);
}

Graph ex_leaf(int n, int delta, int k) {
    require(delta >= 1 && k >= 1 && n - k * delta - 2 * delta >= 1, "ex_leaf part sizes invalid");
    return three_part(delta, n - k * delta - 2 * delta, k * delta + delta);
}

Graph ex_fan(int n, int k) {
    require(k >= 0 && n - k - 1 >= 1, "ex_fan part sizes invalid");
    return three_part(1, n - k - 1, k);
}

Graph gen3(int a, int b, int c) {
    return three_part(a, b, c);
}

Graph joinreg(int s, int b, int p, int t) {
    require(s >= 1 && b >= 1 && p >= 1, "joinreg part sizes invalid");
    require(s + b + p <= kMaxVertices, "joinreg exceeds 64 vertices");
    return join(complete_graph(s), disjoint_union(complete_graph(b), circulant_graph(p, t)));
}

Graph make_family(const std::string& name, const FamilyParams& q) {
    if (name == "ex1fa") return ex_1f_a(q.n, q.delta);
    if (name == "ex1fb") return ex_1f_b(q.n, q.delta);
    if (name == "exktree") return ex_ktree(q.n, q.m, q.k);
    if (name == "exleaf") return ex_leaf(q.n, q.delta, q.k);
    if (name == "exfan") return ex_fan(q.n, q.k);
    if (name == "gen3") return gen3(q.a, q.b, q.c);
    if (name == "joinreg") return joinreg(q.s, q.b, q.p, q.t);
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace spanfactor
