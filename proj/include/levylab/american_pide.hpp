#pragma once

#include "levylab/levy_model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace levylab {

/// Uniform log-price grid and time horizon. The time axis is graded toward
/// maturity (first step T/n_t/64, ratio 1.2) and passes through every checkpoint.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_x = 0;
    double T = 0.0;
    int n_t = 0;
    std::vector<double> checkpoints;  // times-to-maturity that must be grid points

    double dx() const { return (x_max - x_min) / (n_x - 1); }
};

enum class ExerciseStyle { American, European };
enum class LcpMethod { BrennanSchwartz, Psor };
/// Bdf2: variable-step second-order backward differences with the explicit jump
/// term extrapolated from the two previous levels (first step implicit Euler).
enum class TimeScheme { ImplicitEuler, Bdf2 };

struct SolverOptions {
    ExerciseStyle style = ExerciseStyle::American;
    LcpMethod lcp = LcpMethod::BrennanSchwartz;
    TimeScheme scheme = TimeScheme::Bdf2;
    double psor_omega = 1.5;
    double psor_tol = 1e-10;
    double refine_ratio = 1.2;
    double first_step_divisor = 64.0;
    bool check_domain = true;  // enforce the far-field margins around ln K and the limit
};

/// Solution on the stored time slices; tau is time-to-maturity (tau[0] = 0).
struct PriceSurface {
    Grid grid;
    SolverOptions options;
    double strike = 0.0;
    ExerciseStyle style = ExerciseStyle::American;
    std::vector<double> x;
    std::vector<double> tau;
    std::vector<std::vector<double>> values;
    std::vector<std::vector<std::uint8_t>> exercise_mask;
    std::vector<std::vector<double>> premium;  // filled by premium()
    double max_complementarity_residual = 0.0;
    double sigma_eff = 0.0;       // sigma^2 plus folded small-jump variance, square-rooted
    double jump_intensity = 0.0;  // nu(|z| >= eps) treated by the jump stencil
    bool diffusive = false;       // sigma > 0: smooth fit at the boundary
    double rate = 0.0;            // r of the model

    double t(std::size_t j) const { return grid.T - tau[j]; }
    double obstacle(std::size_t i) const;
    /// Slice j at a spot: P - (K - s)^+ interpolated linearly in log-price, payoff added back.
    double value_at(std::size_t j, double spot) const;
    /// Index of the stored slice with tau closest to `tau_query`.
    std::size_t slice_near(double tau_query) const;
};

struct BoundaryCurve {
    std::vector<double> t;
    std::vector<double> tau;
    std::vector<double> b;
    std::vector<double> resolution;  // one Delta s at the sample
};

/// Backward solve of the American (or European) put PIDE. Diffusion, drift,
/// discount and jump-rate diagonal implicit; jump correlation explicit (FFT);
/// obstacle by a direct LCP solve.
PriceSurface solve(const LevyModel& model, double strike, const Grid& grid,
                   const SolverOptions& options = {});

/// b(t) per slice: last exercised node refined by extrapolating sqrt(P - obstacle)
/// (sigma > 0) or P - obstacle (sigma = 0) from the first two continued nodes.
BoundaryCurve extract_boundary(const PriceSurface& surface);

struct PremiumReport {
    std::vector<std::vector<double>> e;  // P - P_e per slice and node
    double min_e = 0.0;
    double max_excess = 0.0;  // max of e - r K tau over nodes
    double max_increase = 0.0;  // max of e(s_{i+1}) - e(s_i)
};

/// Early exercise premium against a companion European solve on the same
/// grid. Fills surface.premium; throws BoundViolation with the worst node if
/// 0 <= e <= r K tau or monotonicity in s fails beyond 1e-6 K.
PremiumReport premium(PriceSurface& surface, const LevyModel& model);

/// Counts of shape violations on a surface (values in units of K).
struct SurfaceDiagnostics {
    int obstacle = 0;
    int monotone_s = 0;
    int convex_s = 0;
    int lipschitz = 0;
    int monotone_t = 0;
    int terminal = 0;
    std::string first_failure;

    int total() const { return obstacle + monotone_s + convex_s + lipschitz + monotone_t + terminal; }
};

SurfaceDiagnostics diagnose_surface(const PriceSurface& surface, double tol_rel = 1e-6);

/// Grid for a single near-maturity solve with maturity theta: dx ~ sigma sqrt(theta)/40
/// and a domain covering the limit minus several predicted gaps.
Grid near_maturity_grid(const LevyModel& model, double strike, double limit, double theta,
                        double gap_estimate, int n_t = 200, double points_per_scale = 40.0);

void write_surface_csv(const std::string& path, const PriceSurface& surface);
void write_boundary_csv(const std::string& path, const BoundaryCurve& curve);

}  // namespace levylab
