#include "levylab/lcp.hpp"

#include "levylab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace levylab {

double Tridiagonal::apply_row(std::span<const double> x, std::size_t i) const {
    double v = diag[i] * x[i];
    if (i > 0) v += lower[i] * x[i - 1];
    if (i + 1 < x.size()) v += upper[i] * x[i + 1];
    return v;
}

void solve_tridiagonal(const Tridiagonal& a, std::span<const double> rhs, std::span<double> x) {
    const std::size_t n = a.size();
    if (rhs.size() != n || x.size() != n) throw InvalidInput("tridiagonal size mismatch");
    if (n == 0) return;
    std::vector<double> c(n);
    std::vector<double> d(n);
    double den = a.diag[0];
    c[0] = a.upper[0] / den;
    d[0] = rhs[0] / den;
    for (std::size_t i = 1; i < n; ++i) {
        den = a.diag[i] - a.lower[i] * c[i - 1];
        c[i] = a.upper[i] / den;
        d[i] = (rhs[i] - a.lower[i] * d[i - 1]) / den;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
}

void brennan_schwartz(const Tridiagonal& a, std::span<const double> rhs,
                      std::span<const double> obstacle, std::span<double> x) {
    const std::size_t n = a.size();
    if (rhs.size() != n || x.size() != n || obstacle.size() != n) {
        throw InvalidInput("LCP size mismatch");
    }
    if (n == 0) return;
    // Eliminate the super-diagonal from the top index down ...
    std::vector<double> dd(n);
    std::vector<double> bb(n);
    dd[n - 1] = a.diag[n - 1];
    bb[n - 1] = rhs[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        const double f = a.upper[i] / dd[i + 1];
        dd[i] = a.diag[i] - f * a.lower[i + 1];
        bb[i] = rhs[i] - f * bb[i + 1];
    }
    // ... then substitute upward from the contact side with projection.
    x[0] = std::max(obstacle[0], bb[0] / dd[0]);
    for (std::size_t i = 1; i < n; ++i) {
        x[i] = std::max(obstacle[i], (bb[i] - a.lower[i] * x[i - 1]) / dd[i]);
    }
}

int psor(const Tridiagonal& a, std::span<const double> rhs, std::span<const double> obstacle,
         std::span<double> x, double omega, double tol, int max_sweeps) {
    const std::size_t n = a.size();
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = rhs[i];
            if (i > 0) r -= a.lower[i] * x[i - 1];
            if (i + 1 < n) r -= a.upper[i] * x[i + 1];
            const double gs = r / a.diag[i];
            const double next = std::max(obstacle[i], x[i] + omega * (gs - x[i]));
            change = std::max(change, std::abs(next - x[i]));
            x[i] = next;
        }
        if (change < tol) return sweep;
    }
    throw Unconverged("PSOR did not reach tolerance");
}

double complementarity_residual(const Tridiagonal& a, std::span<const double> rhs,
                                std::span<const double> obstacle, std::span<const double> x) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double row = (a.apply_row(x, i) - rhs[i]) / a.diag[i];
        worst = std::max(worst, std::abs(std::min(row, x[i] - obstacle[i])));
    }
    return worst;
}

}  // namespace levylab
