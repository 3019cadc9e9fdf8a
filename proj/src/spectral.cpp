#include "spanfactor/spectral.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spanfactor {

namespace {

constexpr int kMaxPowerIterations = 1'000'000;

double component_radius(const Graph& g, VertexSet comp, double tol) {
    std::vector<int> vertices;
    {
        VertexSet m = comp;
        while (m) {
            vertices.push_back(std::countr_zero(m));
            m &= m - 1;
        }
    }
    const int size = static_cast<int>(vertices.size());
    if (size == 1) return 0.0;

    std::vector<double> x(static_cast<std::size_t>(size), 1.0 / std::sqrt(static_cast<double>(size)));
    std::vector<double> y(static_cast<std::size_t>(size));
    std::vector<int> local(kMaxVertices, -1);
    for (int i = 0; i < size; ++i) local[static_cast<std::size_t>(vertices[static_cast<std::size_t>(i)])] = i;

    for (int iter = 0; iter < kMaxPowerIterations; ++iter) {
        // y = (A+I) x on the component
        for (int i = 0; i < size; ++i) {
            double sum = x[static_cast<std::size_t>(i)];
            std::uint64_t nb = g.row(vertices[static_cast<std::size_t>(i)]) & comp;
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                sum += x[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])];
            }
            y[static_cast<std::size_t>(i)] = sum;
        }
        double lambda = 0.0;
        for (int i = 0; i < size; ++i) lambda += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        double residual = 0.0;
        for (int i = 0; i < size; ++i)
            residual = std::max(std::abs(y[static_cast<std::size_t>(i)] - lambda * x[static_cast<std::size_t>(i)]),
                                residual);
        if (residual <= tol) return lambda - 1.0;
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < size; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / norm;
    }
    throw std::runtime_error("power iteration cap exceeded");
}

}  // namespace

double spectral_radius(const Graph& g, double tol) {
    const int n = g.order();
    VertexSet seen = 0;
    const VertexSet all = full_set(n);
    double best = 0.0;
    while (seen != all) {
        const int v = std::countr_zero(~seen & all);
        const VertexSet comp = g.component_of(v);
        seen |= comp;
        best = std::max(best, component_radius(g, comp, tol));
    }
    return best;
}

QuotientSystem quotient_rho(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 0) throw std::invalid_argument("quotient_rho needs a >= 1, b >= 1, c >= 0");
    if (a + b + c > kMaxVertices) throw std::invalid_argument("quotient_rho part sizes exceed 64 vertices");
    const double da = a, db = b, dc = c;
    // det(lambda*I - Q) for Q = [[a-1,b,c],[a,b-1,0],[a,0,0]]
    auto charpoly = [da, db, dc](double l) {
        return l * (l - da + 1.0) * (l - db + 1.0) - da * db * l - da * dc * (l - db + 1.0);
    };
    double lo = db - 1.0;
    double hi = static_cast<double>(a + b + c);  // strictly beyond the largest root
    if (!(charpoly(hi) > 0.0)) throw std::runtime_error("quotient_rho bracket failure");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (charpoly(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    const double rho = 0.5 * (lo + hi);

    QuotientSystem sys;
    sys.a = a;
    sys.b = b;
    sys.c = c;
    sys.matrix = {{{da - 1.0, db, dc}, {da, db - 1.0, 0.0}, {da, 0.0, 0.0}}};
    sys.rho = rho;
    const double x1 = 1.0;
    const double x2 = da * x1 / (rho - db + 1.0);
    const double x3 = da * x1 / rho;
    const double norm = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
    sys.eigvec = {x1 / norm, x2 / norm, x3 / norm};
    return sys;
}

double hong_bound(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("hong_bound requires a connected graph");
    return std::sqrt(2.0 * g.edge_count() - g.order() + 1.0);
}

double hong_shu_fang_bound(const Graph& g) {
    const double d = g.min_degree();
    const double n = g.order();
    return (d - 1.0) / 2.0 + std::sqrt(2.0 * g.edge_count() - d * n + (d + 1.0) * (d + 1.0) / 4.0);
}

}  // namespace spanfactor
