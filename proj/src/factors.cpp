#include "spanfactor/factors.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "spanfactor/matching.hpp"

namespace spanfactor {

namespace {

void validate_certificate(const Graph& g, const FactorCertificate& cert) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : cert.edges) {
        if (!g.adjacent(u, v)) throw std::logic_error("factor certificate uses a non-edge");
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] != cert.k)
            throw std::logic_error("factor certificate is not k-regular");
}

}  // namespace

std::optional<FactorCertificate> has_k_factor(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("has_k_factor needs k >= 1");
    const int n = g.order();
    if ((static_cast<long long>(n) * k) % 2 != 0) return std::nullopt;
    if (g.min_degree() < k) return std::nullopt;

    const auto edge_list = g.edges();
    const int e = static_cast<int>(edge_list.size());
    if (e > 400) throw std::invalid_argument("has_k_factor gadget capped at e(G) <= 400");

    // Gadget layout: externals first (2 per original edge, consecutive), then
    // the internal nodes of each vertex.
    std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(n));  // external ids per vertex
    int next = 0;
    std::vector<int> ext_u(static_cast<std::size_t>(e)), ext_v(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        ext_u[static_cast<std::size_t>(i)] = next++;
        ext_v[static_cast<std::size_t>(i)] = next++;
        slot_of[static_cast<std::size_t>(edge_list[static_cast<std::size_t>(i)].first)].push_back(
            ext_u[static_cast<std::size_t>(i)]);
        slot_of[static_cast<std::size_t>(edge_list[static_cast<std::size_t>(i)].second)].push_back(
            ext_v[static_cast<std::size_t>(i)]);
    }
    std::vector<std::vector<int>> adj;
    adj.resize(static_cast<std::size_t>(next));
    for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(slot_of[static_cast<std::size_t>(v)].size());
        for (int j = 0; j < d - k; ++j) {
            const int internal = static_cast<int>(adj.size());
            adj.emplace_back();
            for (int ext : slot_of[static_cast<std::size_t>(v)]) {
                adj[static_cast<std::size_t>(internal)].push_back(ext);
                adj[static_cast<std::size_t>(ext)].push_back(internal);
            }
        }
    }
    for (int i = 0; i < e; ++i) {
        adj[static_cast<std::size_t>(ext_u[static_cast<std::size_t>(i)])].push_back(
            ext_v[static_cast<std::size_t>(i)]);
        adj[static_cast<std::size_t>(ext_v[static_cast<std::size_t>(i)])].push_back(
            ext_u[static_cast<std::size_t>(i)]);
    }

    const std::vector<int> mate = maximum_matching_mates(adj);
    for (std::size_t i = 0; i < mate.size(); ++i)
        if (mate[i] < 0) return std::nullopt;  // no perfect matching, no k-factor

    FactorCertificate cert{k, {}};
    for (int i = 0; i < e; ++i)
        if (mate[static_cast<std::size_t>(ext_u[static_cast<std::size_t>(i)])] ==
            ext_v[static_cast<std::size_t>(i)])
            cert.edges.push_back(edge_list[static_cast<std::size_t>(i)]);
    validate_certificate(g, cert);
    return cert;
}

std::optional<FactorCertificate> brute_force_k_factor(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("brute_force_k_factor needs k >= 1");
    const auto edge_list = g.edges();
    const int e = static_cast<int>(edge_list.size());
    if (e > 24) throw std::invalid_argument("brute_force_k_factor capped at e(G) <= 24");
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
        int deg[kMaxVertices] = {};
        bool ok = true;
        for (int i = 0; i < e && ok; ++i) {
            if (!((mask >> i) & 1u)) continue;
            if (++deg[edge_list[static_cast<std::size_t>(i)].first] > k ||
                ++deg[edge_list[static_cast<std::size_t>(i)].second] > k)
                ok = false;
        }
        if (!ok) continue;
        for (int v = 0; v < n; ++v)
            if (deg[v] != k) { ok = false; break; }
        if (!ok) continue;
        FactorCertificate cert{k, {}};
        for (int i = 0; i < e; ++i)
            if ((mask >> i) & 1u) cert.edges.push_back(edge_list[static_cast<std::size_t>(i)]);
        return cert;
    }
    return std::nullopt;
}

}  // namespace spanfactor
