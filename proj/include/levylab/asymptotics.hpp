#pragma once

#include "levylab/levy_model.hpp"

#include <optional>

namespace levylab {

/// Everything the near-maturity formulas need for one (model, strike) pair.
struct AsymptoticParams {
    RegimeReport regime;
    double strike = 0.0;
    double sigma = 0.0;
    double b_limit = 0.0;     // b(T): K when d >= 0, xi when d < 0
    double lambda = 0.0;      // nu({ln(K/b(T))})
    double delta_bar = 0.0;   // delta + int_{(ln(K/b(T)), inf)} e^z nu(dz)
    double beta = 0.0;        // K / (b(T) delta_bar)
    double linear_coeff = 0.0;  // int (e^z - 1)^- nu(dz), pure-jump linear law
    double eta0 = 0.0;          // negative tempered-stable constant (pure-jump stable law)
    double alpha = 0.0;         // its index
    std::optional<double> y_star;
};

/// F(xi) = rK - delta xi - int (xi e^z - K)^+ nu(dz); strictly decreasing in xi.
double xi_equation(const LevyModel& model, double strike, double xi);

/// Root of xi_equation in (0, K). Requires d < 0.
double xi_limit(const LevyModel& model, double strike);

/// lambda, delta_bar and beta at a given boundary limit (normally xi).
AsymptoticParams lambda_beta_params(const LevyModel& model, double strike, double b_limit);

/// Regime plus all scalar constants; b_limit resolved from the regime.
AsymptoticParams asymptotic_params(const LevyModel& model, double strike);

struct RatePrediction {
    double gap;          // predicted K - b or xi - b
    double denominator;  // normalizer used in actual/predicted ratios
};

/// Predicted boundary gap at time-to-maturity theta for the regime's rate tag.
RatePrediction rate_formula(const AsymptoticParams& params, double theta);
RatePrediction rate_formula(const AsymptoticParams& params, RateTag tag, double theta);

/// (K - b(T) e^{a sqrt(theta)})^+ + sigma b(T) delta_bar e^lambda v theta^{3/2}.
double second_order_expansion(const AsymptoticParams& params, double a, double theta,
                              double v_value);

}  // namespace levylab
