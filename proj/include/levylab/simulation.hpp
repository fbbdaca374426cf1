#pragma once

#include "levylab/levy_model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace levylab {

/// Small-jump truncation used by the sampler: jumps with |z| < epsilon are
/// replaced by a Gaussian of variance t * small_variance.
struct Truncation {
    double epsilon = 0.0;
    double small_variance = 0.0;   // int_{|z|<eps} z^2 nu(dz), density part only
    double big_jump_rate = 0.0;    // nu(|z| >= eps)
};

/// Largest admissible epsilon: small-jump variance below 1e-4 sigma^2 t, at
/// least 1e-6, and raised until t * nu(|z| >= eps) <= 200. Zero for finite activity.
Truncation choose_truncation(const LevyModel& model, double t);

/// n samples of X_t (without the (r - delta) t shift) under the martingale
/// drift. Sample i depends only on (seed, i), so runs with different t share
/// random numbers.
std::vector<double> simulate_increments(const LevyModel& model, double t, std::size_t n,
                                        std::uint64_t seed);

/// Kolmogorov-Smirnov distance between the empirical law of `sample` and N(0, sd^2).
/// Sorts `sample` in place.
double ks_distance_normal(std::span<double> sample, double sd);

struct CltRow {
    double t = 0.0;
    double ks = 0.0;
    double null_ks = 0.0;  // KS of the pure Gaussian part on the same draws
};

struct CltDiagnostic {
    std::vector<CltRow> rows;
    /// Bootstrap 5% quantile of KS(t_i) - KS(t_{i+1}) per consecutive pair.
    std::vector<double> lower_quantiles;
    bool strictly_decreasing = false;
};

/// KS(X_t / sqrt t, N(0, sigma^2)) for each t, with a paired bootstrap over
/// sample indices deciding whether the sequence strictly decreases at 95%.
CltDiagnostic small_time_clt_diagnostic(const LevyModel& model, std::span<const double> times,
                                        std::size_t n, std::uint64_t seed,
                                        int bootstrap_resamples = 200);

}  // namespace levylab
