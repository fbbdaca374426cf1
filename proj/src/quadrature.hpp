#pragma once

// Thin wrappers over Boost.Math quadrature shared by the nu-integrals.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

namespace levylab::detail {

inline constexpr double kQuadTol = 1e-12;

/// Adaptive Gauss-Kronrod on [a, b]; b may be +infinity.
template <class F>
double gk(F&& f, double a, double b) {
    if (!(b > a)) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, kQuadTol,
                                                                       &err);
}

/// int_0^c g(z) dz for g with an integrable power singularity at 0, via
/// z = c e^{-t}, t in [0, inf).
template <class F>
double near_zero(F&& g, double c) {
    if (!(c > 0.0)) return 0.0;
    auto h = [&](double t) {
        double z = c * std::exp(-t);
        if (z <= 0.0) return 0.0;
        const double v = g(z) * z;
        // inf * 0 once z underflows; the integrable tail there is negligible
        return std::isfinite(v) ? v : 0.0;
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    double err = 0.0;
    return integrator.integrate(h, 0.0, std::numeric_limits<double>::infinity(), kQuadTol,
                                &err);
}

/// Fixed 10-point Gauss-Legendre on [a, b] for smooth integrands on small cells.
template <class F>
double gl10(F&& f, double a, double b) {
    return boost::math::quadrature::gauss<double, 10>::integrate(f, a, b);
}

}  // namespace levylab::detail
