#pragma once

#include <string>
#include <vector>

namespace levylab {

/// Uniform y-grid; 0 must be a node (the local-time level sits there).
struct StoppingGrid {
    double x_min = -4.0;
    double x_max = 4.0;
    double dx = 2e-3;
};

/// Growth factor applied to the phase-one local-time reward: e^{+lambda t}
/// (the default) or e^{-lambda t}.
enum class PhaseOneGrowth { Growing, Discounted };

/// Horizon-one stopping problem with running reward f(x) = x + lambda beta x^+
/// before a Poisson(lambda) clock rings and a local-time reward at level 0 after.
struct StoppingProblem {
    double lambda = 0.0;
    double beta = 0.0;
    PhaseOneGrowth growth = PhaseOneGrowth::Growing;
    StoppingGrid grid;
};

enum class StoppingMethod { ObstaclePde, LatticeDp };

struct StoppingValue {
    std::vector<double> y;
    std::vector<double> v;
    double y_star = 0.0;
    double y_star_uncertainty = 0.0;
    StoppingMethod method = StoppingMethod::ObstaclePde;
    double residual = 0.0;  // complementarity residual (PDE only)

    /// Linear interpolation of v; 0 below the grid, extrapolated slope 1 above.
    double at(double y) const;
};

/// lambda = 0 value by the parabolic obstacle problem
/// w_tau = w_xx / 2 + x, w >= 0, w(0, .) = 0, solved to tau = 1 with
/// Crank-Nicolson (Rannacher start) and a direct LCP solve per step. Throws
/// GridTooCoarse if y* moves by more than one step under half-step refinement.
StoppingValue v_zero(const StoppingGrid& grid = {}, int n_steps = 2000);

/// Lattice dynamic program on (step, node, phase) with dt = dx^2. When
/// check_convergence is set, a run with dx/2 must agree within 1% of max v
/// (Unconverged otherwise).
StoppingValue v_lambda_beta(const StoppingProblem& problem, bool check_convergence = false);

/// Threshold y* = -inf{x : v(x) > 0} from the lattice; the sign change is
/// located by extrapolating sqrt(v) from the first two positive nodes.
double y_star(const StoppingProblem& problem);

/// Mean of the lattice local-time estimator L_1(0) = dx * (#visits of 0) for
/// the walk used by v_lambda_beta; tends to sqrt(2/pi).
double lattice_local_time_mean(double dx);

void write_stopping_csv(const std::string& path, const StoppingValue& value);

}  // namespace levylab
