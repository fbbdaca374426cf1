#include "levylab/lcp.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace levylab;

namespace {

// Implicit heat step with a put obstacle: an M-matrix LCP with a low contact block.
Tridiagonal heat_matrix(std::size_t n, double k) {
    Tridiagonal a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.diag[i] = 1.0 + 2.0 * k;
        if (i > 0) a.lower[i] = -k;
        if (i + 1 < n) a.upper[i] = -k;
    }
    return a;
}

}  // namespace

TEST(Lcp, ThomasSolvesTridiagonal) {
    const std::size_t n = 50;
    const Tridiagonal a = heat_matrix(n, 0.7);
    std::vector<double> x_true(n), rhs(n), x(n);
    for (std::size_t i = 0; i < n; ++i) x_true[i] = std::sin(0.3 * i);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = a.apply_row(x_true, i);
    solve_tridiagonal(a, rhs, x);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(x[i], x_true[i], 1e-12);
}

TEST(Lcp, BrennanSchwartzAgreesWithPsor) {
    const std::size_t n = 201;
    const Tridiagonal a = heat_matrix(n, 5.0);
    std::vector<double> g(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = -2.0 + 4.0 * i / (n - 1);
        g[i] = std::max(1.0 - std::exp(x), 0.0);
        rhs[i] = g[i] * 0.98 + 0.001;
    }
    std::vector<double> bs(n), ps(g);
    brennan_schwartz(a, rhs, g, bs);
    const int sweeps = psor(a, rhs, g, ps, 1.5, 1e-13);
    EXPECT_GT(sweeps, 0);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(bs[i], ps[i], 1e-9);
    EXPECT_LT(complementarity_residual(a, rhs, g, bs), 1e-12);
    for (std::size_t i = 0; i < n; ++i) EXPECT_GE(bs[i], g[i] - 1e-15);
}

TEST(Lcp, ResidualDetectsViolation) {
    const Tridiagonal a = heat_matrix(10, 1.0);
    std::vector<double> g(10, 0.0), rhs(10, 1.0), x(10, -0.5);
    EXPECT_GT(complementarity_residual(a, rhs, g, x), 0.1);
}
