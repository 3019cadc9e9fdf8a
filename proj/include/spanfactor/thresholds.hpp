#pragma once

#include <cstdint>
#include <string>

#include "spanfactor/graph.hpp"

namespace spanfactor {

// phi(n,r,q) = binomial(n-q-1, r) + (q+1)*binomial(q, r-1).
std::int64_t phi(int n, int r, int q);

// psi(n,r,k,q) = binomial(n-q+2k-4, r) + (q-2k+4)*binomial(q, r-1).
std::int64_t psi(int n, int r, int k, int q);

// Spectral-radius threshold above which a graph with min degree >= delta has
// a 1-factor up to the two exceptional closure families:
// (delta-1)/2 + sqrt(n^2 - (3delta+5)n + (13delta^2+23delta+41)/4).
// Requires 1 <= delta <= n/2-1 and n >= 6delta+10.
double spectral_threshold_1f(int n, int delta);

// k-factor analogue:
// (delta-1)/2 + sqrt(n^2 - (3delta-4k+11)n
//                    + (13delta^2-(32k-94)delta+16k^2-104k+161)/4).
// Requires k >= 2, 2k-2 <= delta <= floor((n+2k-5)/2), n >= 6delta+4k-3.
double spectral_threshold_kf(int n, int k, int delta);

struct CliqueThreshold {
    std::int64_t value;        // max of the two branches
    std::int64_t low_branch;   // value at q = delta+1
    std::int64_t high_branch;  // value at the top of the q range
    const char* winner;        // "delta", "half", or "tie"
};

// max{phi(n,r,delta+1), phi(n,r,n/2-1)}; n even, 1 <= delta <= n/2-1.
CliqueThreshold clique_threshold_1f(int n, int r, int delta);

// max{psi(n,r,k,delta+1), psi(n,r,k,floor((n+2k-5)/2))}.
CliqueThreshold clique_threshold_kf(int n, int r, int k, int delta);

// --- Named extremal families ------------------------------------------------
// Vertex layout convention throughout: hub part first, clique part second,
// independent/regular part last.

Graph ex_1f_a(int n, int delta);            // K_{n-delta-1} + K_{delta+1} (disjoint)
Graph ex_1f_b(int n, int delta);            // K_delta v (K_{n-2delta-1} + I_{delta+1})
Graph ex_ktree(int n, int m, int k);        // K_m v (K_{n-km-1} + I_{km-m+1})
Graph ex_leaf(int n, int delta, int k);     // K_delta v (K_{n-kdelta-2delta} + I_{kdelta+delta})
Graph ex_fan(int n, int k);                 // K_1 v (K_{n-k-1} + I_k)
Graph gen3(int a, int b, int c);            // K_a v (K_b + I_c)
Graph joinreg(int s, int b, int p, int t);  // K_s v (K_b + R(p,t))

struct FamilyParams {
    int n = 0, m = 0, k = 0, delta = 0;
    int a = 0, b = 0, c = 0, s = 0, p = 0, t = 0;
};

// Dispatcher for the CLI: name in {ex1fa, ex1fb, exktree, exleaf, exfan,
// gen3, joinreg}.
Graph make_family(const std::string& name, const FamilyParams& params);

}  // namespace spanfactor
