#include "levylab/asymptotics.hpp"

#include "levylab/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

#include <cmath>

namespace levylab {

namespace {

constexpr double kAtomTol = 1e-12;

bool d_negative(const LevyModel& model) {
    try {
        return compute_d(model) < -1e-12;
    } catch (const DivergentPositiveJumps&) {
        return true;
    }
}

}  // namespace

double xi_equation(const LevyModel& model, double strike, double xi) {
    if (!(xi > 0.0)) return model.r() * strike;
    const double c = std::log(strike / xi);
    // int (xi e^z - K)^+ nu(dz) lives on z > c
    double jump = 0.0;
    if (c > 0.0) {
        jump = xi * tail_exp_moment_above(model, c) - strike * tail_mass_above(model, c);
    } else {
        jump = integrate_nu(
            model, [&](double z) { return std::max(xi * std::exp(z) - strike, 0.0); },
            {std::max(c, -kInf), kInf}, 1);
    }
    return model.r() * strike - model.delta() * xi - jump;
}

double xi_limit(const LevyModel& model, double strike) {
    if (!(strike > 0.0)) throw InvalidInput("strike must be > 0");
    if (!d_negative(model)) throw RegimeMismatch("xi is defined only when d < 0");

    double lo = 0.0;
    double hi = strike;
    const double f_hi = xi_equation(model, strike, hi * (1.0 - 1e-15));
    if (!(model.r() > 0.0) || !(f_hi < 0.0)) {
        throw BracketFailure("F has no sign change on (0, K)");
    }
    const double tol = 1e-12 * model.r() * strike;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = xi_equation(model, strike, mid);
        if (std::abs(f) < tol || hi - lo < 1e-15 * strike) return mid;
        (f > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

AsymptoticParams lambda_beta_params(const LevyModel& model, double strike, double b_limit) {
    if (!(b_limit > 0.0 && b_limit <= strike)) {
        throw InvalidInput("boundary limit must lie in (0, K]");
    }
    AsymptoticParams p;
    p.strike = strike;
    p.sigma = model.sigma();
    p.b_limit = b_limit;

    const double c = std::log(strike / b_limit);
    double matched_above = 0.0;
    for (const auto& a : model.point_masses()) {
        if (std::abs(a.location - c) <= kAtomTol) {
            p.lambda += a.weight;
            if (a.location > c) matched_above += a.weight * std::exp(a.location);
        }
    }
    double tail = 0.0;
    if (c > 0.0) {
        tail = tail_exp_moment_above(model, c) - matched_above;
    } else {
        tail = integrate_nu(model, [](double z) { return std::exp(z); }, {c, kInf}, 0) -
               matched_above;
        for (const auto& a : model.point_masses()) {
            if (a.location == c) tail -= a.weight * std::exp(a.location);
        }
    }
    p.delta_bar = model.delta() + tail;
    p.beta = p.delta_bar > 0.0 ? strike / (b_limit * p.delta_bar) : kInf;
    return p;
}

AsymptoticParams asymptotic_params(const LevyModel& model, double strike) {
    const RegimeReport rep = classify_regime(model, strike);
    AsymptoticParams p = lambda_beta_params(model, strike, rep.limit_value);
    p.regime = rep;
    if (rep.applicable_rate == RateTag::PureJumpLinear) {
        p.linear_coeff = negative_part_integral(model);
    }
    if (const auto* ts = std::get_if<jumps::TemperedStable>(&model.measure().law)) {
        p.eta0 = ts->c_neg;
        p.alpha = ts->alpha_neg;
    }
    return p;
}

RatePrediction rate_formula(const AsymptoticParams& params, double theta) {
    return rate_formula(params, params.regime.applicable_rate, theta);
}

RatePrediction rate_formula(const AsymptoticParams& params, RateTag tag, double theta) {
    if (!(theta > 0.0 && theta <= 0.1)) throw InvalidInput("theta must lie in (0, 0.1]");
    const double k = params.strike;
    const double s = params.sigma;
    const double log_term = -std::log(theta);
    switch (tag) {
        case RateTag::FiniteActivityPositiveD:
        case RateTag::DiffusiveLogRate: {
            const double g = s * k * std::sqrt(theta * log_term);
            return {g, g};
        }
        case RateTag::FiniteActivityZeroD: {
            const double g = std::sqrt(2.0) * s * k * std::sqrt(theta * log_term);
            return {g, g};
        }
        case RateTag::FiniteActivityNegativeD:
        case RateTag::NegativeDParabolic: {
            if (!params.y_star) throw MissingYStar("d < 0 rate needs the stopping threshold y*");
            const double g = *params.y_star * s * params.b_limit * std::sqrt(theta);
            return {g, g};
        }
        case RateTag::PureJumpLinear: {
            const double x = theta * params.linear_coeff;
            const double g = k * x / (1.0 + x);
            return {g, g};
        }
        case RateTag::TemperedStablePureJump: {
            const double a = params.alpha;
            const double c =
                std::pow(params.eta0 * boost::math::tgamma(2.0 - a) / (a - 1.0), 1.0 / a);
            const double g = k * c * std::pow(theta, 1.0 / a) * std::pow(log_term, 1.0 - 1.0 / a);
            return {g, g};
        }
        case RateTag::None: break;
    }
    throw UnsupportedRegime("no rate law applies to this regime");
}

double second_order_expansion(const AsymptoticParams& params, double a, double theta,
                              double v_value) {
    if (!(a < 0.0)) throw InvalidInput("expansion offset a must be negative");
    if (!(theta > 0.0)) throw InvalidInput("theta must be > 0");
    const double b = params.b_limit;
    const double payoff = std::max(params.strike - b * std::exp(a * std::sqrt(theta)), 0.0);
    return payoff + params.sigma * b * params.delta_bar * std::exp(params.lambda) * v_value *
                        std::pow(theta, 1.5);
}

}  // namespace levylab
