#pragma once

#include <span>
#include <vector>

namespace levylab {

/// Tridiagonal matrix: row i is lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1].
struct Tridiagonal {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;

    explicit Tridiagonal(std::size_t n = 0) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}
    std::size_t size() const { return diag.size(); }
    double apply_row(std::span<const double> x, std::size_t i) const;
};

/// Thomas algorithm.
void solve_tridiagonal(const Tridiagonal& a, std::span<const double> rhs, std::span<double> x);

/// Direct solve of the LCP  A x >= rhs, x >= g, (A x - rhs)^T (x - g) = 0 for an
/// M-matrix whose contact set is a block of low indices (put-type obstacle).
void brennan_schwartz(const Tridiagonal& a, std::span<const double> rhs,
                      std::span<const double> obstacle, std::span<double> x);

/// Projected SOR on the same LCP, starting from x. Returns the sweep count;
/// stops when the max update falls below tol.
int psor(const Tridiagonal& a, std::span<const double> rhs, std::span<const double> obstacle,
         std::span<double> x, double omega = 1.5, double tol = 1e-10, int max_sweeps = 200000);

/// max_i |min((A x - rhs)_i / A_ii, x_i - g_i)|, in the units of x.
double complementarity_residual(const Tridiagonal& a, std::span<const double> rhs,
                                std::span<const double> obstacle, std::span<const double> x);

}  // namespace levylab
