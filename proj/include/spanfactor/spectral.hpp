#pragma once

#include <array>

#include "spanfactor/graph.hpp"

namespace spanfactor {

// Adjacency spectral radius by power iteration on A+I (primitive on each
// connected component, so no bipartite oscillation), from the all-ones
// vector. Returns the Rayleigh value minus 1 once the residual
// ||(A+I)x - lambda*x||_inf drops to tol with ||x||_2 = 1. Disconnected
// graphs: maximum over components. Throws after 10^6 iterations.
double spectral_radius(const Graph& g, double tol = 1e-10);

// Quotient system of the three-part join K_a v (K_b + I_c) under its
// equitable partition.
struct QuotientSystem {
    int a, b, c;
    std::array<std::array<double, 3>, 3> matrix;  // [[a-1,b,c],[a,b-1,0],[a,0,0]]
    double rho;                                   // Perron root
    std::array<double, 3> eigvec;                 // positive, unit 2-norm
};

// Perron root of the quotient matrix by bisection of the characteristic
// cubic on (b-1, a+b+c]; the eigenvector is recovered from the row
// equations x2 = a*x1/(rho-b+1), x3 = a*x1/rho.
QuotientSystem quotient_rho(int a, int b, int c);

// Spectral upper bound sqrt(2e(G) - n + 1) for connected graphs.
double hong_bound(const Graph& g);

// Spectral upper bound (d-1)/2 + sqrt(2e(G) - d*n + (d+1)^2/4), d = min degree.
double hong_shu_fang_bound(const Graph& g);

}  // namespace spanfactor
