#pragma once

#include "levylab/american_pide.hpp"
#include "levylab/asymptotics.hpp"
#include "levylab/config.hpp"
#include "levylab/stopping_value.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace levylab {

/// Geometric ladder from theta_max down to theta_min, n points.
std::vector<double> theta_ladder(double theta_max, double theta_min, int n);

struct Experiment {
    explicit Experiment(LevyModel m) : model(std::move(m)) {}

    LevyModel model;
    double strike = 100.0;
    double maturity = 1.0;
    std::vector<double> thetas;  // strictly decreasing, at least 6 points
    GridConfig grid;
    std::optional<RateTag> expected;
    std::optional<double> tolerance;
    std::optional<double> y_star;
    PhaseOneGrowth growth = PhaseOneGrowth::Growing;
    double stopping_dx = 2e-3;
    std::vector<double> expansion_thetas{0.016, 0.008, 0.004, 0.002};
    std::vector<double> expansion_multiples{0.25, 0.5, 2.0};
};

Experiment experiment_from_config(const Config& config);

/// How the ratio is extrapolated to theta -> 0.
enum class Regressor { InverseLog, SqrtTheta, Theta };

std::string to_string(Regressor r);

struct RateRow {
    double theta = 0.0;
    double b = 0.0;
    double gap = 0.0;        // limit - b
    double predicted = 0.0;  // predicted gap
    double ratio = 0.0;      // gap / predicted
    double resolution = 0.0;
    double c = 0.0;  // |gap - predicted| / sqrt(theta)
    int n_x = 0;
    int n_steps = 0;
    double dx = 0.0;
    double lcp_residual = 0.0;
    std::string error;  // empty when the row solved

    bool ok() const { return error.empty(); }
};

struct RateReport {
    AsymptoticParams params;
    RateTag tag = RateTag::None;
    Regressor regressor = Regressor::InverseLog;
    std::vector<RateRow> rows;
    int fit_points = 0;
    double intercept = 0.0;
    double slope = 0.0;
    double fit_residual = 0.0;  // rms of the linear fit
    double tolerance = 0.0;
    double c_mid = 0.0;     // max c over the upper half of the fitted rows
    double c_low = 0.0;     // max c over the lower half
    double c_floor = 0.0;   // one boundary resolution over sqrt(theta), lower half
    bool c_stable = false;  // c_low <= max(1.25 c_mid, c_floor)
    bool pass = false;
    std::string scheme;  // time scheme / LCP solver used for every row
    std::string note;
};

/// Solve once per theta with a grid sized for that theta, read b at T - theta
/// and compare with the regime's predicted gap. Row failures are recorded,
/// not thrown. The ratio is extrapolated by least squares over the smallest
/// half of the ladder (at least 6 solved rows). PASS iff the intercept lies
/// within the tolerance of 1; log-rate regimes also need c_stable.
RateReport run_rate_experiment(const Experiment& exp);

struct ExpansionRow {
    double multiple = 0.0;  // a = -multiple sigma y*
    double a = 0.0;
    double theta = 0.0;
    double spot = 0.0;
    double price = 0.0;
    double payoff = 0.0;
    double expansion = 0.0;
    double residual = 0.0;  // |P - expansion| (or |P - payoff| below the threshold)
    double scaled = 0.0;    // residual / theta^{3/2}
    std::string error;
};

struct ExpansionSeries {
    double multiple = 0.0;
    double a = 0.0;
    bool above_threshold = false;  // a > -sigma y*
    bool decreasing = false;       // strictly, or zero to 1e-12 K throughout
};

struct ExpansionReport {
    AsymptoticParams params;
    double y_star = 0.0;
    std::vector<ExpansionRow> rows;
    std::vector<ExpansionSeries> series;
    double top_relative_error = 0.0;  // at the largest theta, a = -sigma y*/2
    bool pass = false;
};

/// Second-order expansion check for a d < 0 model. Each theta gets its own
/// solve with a grid resolving sigma sqrt(theta).
ExpansionReport run_expansion_experiment(const Experiment& exp);

/// Stopping threshold for the regime: y_{0,0} from the obstacle PDE when
/// lambda = 0, the lattice y_{lambda,beta} otherwise. Uses exp.y_star if set.
double resolve_y_star(const Experiment& exp, const AsymptoticParams& params);

void write_rates_csv(const std::string& path, const RateReport& report);
void write_expansion_csv(const std::string& path, const ExpansionReport& report);

}  // namespace levylab
