#include "levylab/european.hpp"

#include "levylab/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>

namespace levylab {

namespace {

constexpr int kMaxPanels = 400;

// Tail of int_v^inf Re[e^{i m s} B(s)] ds for a smooth B with algebraic decay,
// as cosine and sine transforms in t = s - v.
double oscillatory_tail(const std::function<cplx(double)>& b, double m, double v) {
    if (m == 0.0) {
        boost::math::quadrature::exp_sinh<double> es;
        return es.integrate([&](double t) { return b(v + t).real(); }, 1e-10);
    }
    thread_local boost::math::quadrature::ooura_fourier_cos<double> fcos(1e-10);
    thread_local boost::math::quadrature::ooura_fourier_sin<double> fsin(1e-10);
    const cplx shift = std::exp(cplx(0.0, m * v));
    auto d = [&](double t) { return shift * b(v + t); };
    const double w = std::abs(m);
    const double c = fcos.integrate([&](double t) { return d(t).real(); }, w).first;
    const double s = fsin.integrate([&](double t) { return d(t).imag(); }, w).first;
    // Re[e^{imt} D] = cos(|m| t) Re D - sign(m) sin(|m| t) Im D
    return c - std::copysign(1.0, m) * s;
}

double fourier_put(const LevyModel& model, double theta, double spot, double strike) {
    const double k = std::log(strike);
    const double x0 = std::log(spot) + (model.r() - model.delta()) * theta;
    const double m = k - x0;
    // In the money the contour weight is e^{alpha m}; keep it O(1) to avoid cancellation.
    double alpha = 0.5 * std::min(model.negative_tail_rate(), 4.0);
    if (m > 0.0) alpha = std::min(alpha, 1.0 / m);
    const cplx i(0.0, 1.0);

    auto term = [&](double v) {
        const cplx z(v, -alpha);
        const cplx iz = i * z;
        return std::exp(iz * m + theta * characteristic_exponent(model, -z)) / (iz * (iz + 1.0));
    };
    // term without the oscillating factor e^{i v m}
    auto amplitude = [&](double v) -> cplx {
        const cplx z(v, -alpha);
        const cplx iz = i * z;
        return std::exp(alpha * m + theta * characteristic_exponent(model, -z)) / (iz * (iz + 1.0));
    };
    auto integrand = [&](double v) { return term(v).real(); };

    const double diffusion_scale =
        model.sigma() > 0.0 ? 1.0 / (model.sigma() * std::sqrt(theta)) : kInf;
    const double osc_scale = std::abs(m) > 0.0 ? 2.0 * M_PI / std::abs(m) : kInf;
    // alpha is also the width of the peak left by the pole at z = 0
    const double width = 0.25 * std::min({diffusion_scale, osc_scale, 40.0, 4.0 * alpha});

    using GL = boost::math::quadrature::gauss<double, 20>;
    double sum = 0.0;
    double v = 0.0;
    for (int panel = 0;; ++panel) {
        sum += GL::integrate(integrand, v, v + width);
        v += width;
        // |term| decays at least like 1/v^2, so the tail is bounded by |term(v)| v.
        const double envelope = std::abs(term(v)) * v;
        if (envelope < 1e-13 * M_PI && v > 2.0 * width) break;
        if (panel == kMaxPanels) {
            // slow algebraic decay (pure-jump laws at small theta)
            sum += oscillatory_tail(amplitude, m, v);
            break;
        }
    }
    if (!std::isfinite(sum)) {
        throw NumericalFailure(fmt::format("Fourier integral is not finite (theta={})", theta));
    }
    return strike * std::exp(-model.r() * theta) * sum / M_PI;
}

}  // namespace

EuropeanQuote price_european_put(const LevyModel& model, double theta, double spot,
                                 double strike) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw InvalidInput("theta must be >= 0");
    if (!(spot >= 0.0) || !std::isfinite(spot)) throw InvalidInput("spot must be >= 0");
    if (!(strike > 0.0)) throw InvalidInput("strike must be > 0");

    EuropeanQuote q{theta, spot, strike, 0.0, QuoteMethod::ClosedFormDegenerate};
    if (theta == 0.0) {
        q.value = std::max(strike - spot, 0.0);
        return q;
    }
    if (spot == 0.0) {
        q.value = strike * std::exp(-model.r() * theta);
        return q;
    }
    q.method = QuoteMethod::Fourier;
    q.value = fourier_put(model, theta, spot, strike);

    const double disc_k = strike * std::exp(-model.r() * theta);
    const double lower = std::max(disc_k - spot * std::exp(-model.delta() * theta), 0.0);
    const double tol = 1e-7 * strike;
    if (!(q.value > lower - tol && q.value < disc_k + tol)) {
        throw NumericalFailure(fmt::format("Fourier price {} outside no-arbitrage bounds [{}, {}]",
                                           q.value, lower, disc_k));
    }
    q.value = std::clamp(q.value, lower, disc_k);
    return q;
}

double critical_price_european(const LevyModel& model, double theta, double strike) {
    if (!(theta > 0.0)) throw InvalidInput("theta must be > 0");
    auto g = [&](double s) {
        return price_european_put(model, theta, s, strike).value - (strike - s);
    };
    double lo = 1e-6 * strike;
    double hi = (1.0 - 1e-9) * strike;
    double g_lo = g(lo);
    double g_hi = g(hi);
    if (!(g_lo < 0.0 && g_hi > 0.0)) {
        throw BracketFailure(fmt::format("no sign change of P_e - (K - s) on [{}, {}]", lo, hi));
    }
    const double tol = 1e-10 * strike;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * strike; ++it) {
        // secant proposal, bisection fallback when it leaves the middle of the bracket
        double s = hi - g_hi * (hi - lo) / (g_hi - g_lo);
        const double w = hi - lo;
        if (!(s > lo + 0.05 * w && s < hi - 0.05 * w)) s = 0.5 * (lo + hi);
        const double gs = g(s);
        if (std::abs(gs) < tol) return s;
        if (gs < 0.0) {
            lo = s;
            g_lo = gs;
        } else {
            hi = s;
            g_hi = gs;
        }
    }
    return 0.5 * (lo + hi);
}

double zeta(const LevyModel& model, double tau, double strike) {
    return strike / critical_price_european(model, tau, strike) - 1.0;
}

}  // namespace levylab
