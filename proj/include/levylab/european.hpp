#pragma once

#include "levylab/levy_model.hpp"

namespace levylab {

enum class QuoteMethod { Fourier, ClosedFormDegenerate };

struct EuropeanQuote {
    double theta = 0.0;
    double spot = 0.0;
    double strike = 0.0;
    double value = 0.0;
    QuoteMethod method = QuoteMethod::Fourier;
};

/// European put by damped Fourier inversion along Im(u) = -alpha, alpha half
/// the admissible strip (capped at 2, and at 1/ln(K/F) in the money). theta = 0 and spot = 0 short-circuit.
EuropeanQuote price_european_put(const LevyModel& model, double theta, double spot,
                                 double strike);

/// European critical price b_e: root of P_e(theta, s) = K - s in (0, K).
double critical_price_european(const LevyModel& model, double theta, double strike);

/// zeta(tau) = K / b_e(tau) - 1.
double zeta(const LevyModel& model, double tau, double strike);

}  // namespace levylab
