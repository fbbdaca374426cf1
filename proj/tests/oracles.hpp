#pragma once

// Independent reference prices used only by the tests.

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double bs_put(double s, double k, double r, double q, double sigma, double t) {
    if (t <= 0.0) return std::max(k - s, 0.0);
    const double sd = sigma * std::sqrt(t);
    const double d1 = (std::log(s / k) + (r - q + 0.5 * sigma * sigma) * t) / sd;
    const double d2 = d1 - sd;
    return k * std::exp(-r * t) * norm_cdf(-d2) - s * std::exp(-q * t) * norm_cdf(-d1);
}

/// Cox-Ross-Rubinstein American put with n steps.
inline double crr_american_put(double s, double k, double r, double q, double sigma, double t,
                               int n) {
    const double dt = t / n;
    const double u = std::exp(sigma * std::sqrt(dt));
    const double d = 1.0 / u;
    const double p = (std::exp((r - q) * dt) - d) / (u - d);
    const double disc = std::exp(-r * dt);
    std::vector<double> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = std::max(k - s * std::pow(u, 2 * i - n), 0.0);
    for (int j = n - 1; j >= 0; --j) {
        for (int i = 0; i <= j; ++i) {
            const double cont = disc * (p * v[i + 1] + (1.0 - p) * v[i]);
            v[i] = std::max(cont, k - s * std::pow(u, 2 * i - j));
        }
    }
    return v[0];
}

/// Merton jump-diffusion European put as a Poisson mixture of Black-Scholes prices.
inline double merton_put(double s, double k, double r, double q, double sigma, double lambda,
                         double mu, double delta, double t, int terms = 40) {
    const double kappa = std::exp(mu + 0.5 * delta * delta) - 1.0;
    const double lp = lambda * (1.0 + kappa) * t;
    double sum = 0.0;
    double log_w = -lp;  // log of e^{-lp} lp^n / n!
    for (int n = 0; n < terms; ++n) {
        if (n > 0) log_w += std::log(lp) - std::log(static_cast<double>(n));
        const double sig_n = std::sqrt(sigma * sigma + n * delta * delta / t);
        const double r_n = r - lambda * kappa + n * std::log1p(kappa) / t;
        sum += std::exp(log_w) * bs_put(s, k, r_n, q, sig_n, t);
    }
    return sum;
}

}  // namespace oracle
