#include "levylab/harness.hpp"

#include "levylab/csv.hpp"
#include "levylab/errors.hpp"
#include "levylab/version.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace levylab {

namespace {

Regressor regressor_for(RateTag tag) {
    switch (tag) {
        case RateTag::FiniteActivityNegativeD:
        case RateTag::NegativeDParabolic: return Regressor::SqrtTheta;
        case RateTag::PureJumpLinear: return Regressor::Theta;
        default: return Regressor::InverseLog;
    }
}

double regressor_value(Regressor r, double theta) {
    switch (r) {
        case Regressor::InverseLog: return 1.0 / std::abs(std::log(theta));
        case Regressor::SqrtTheta: return std::sqrt(theta);
        case Regressor::Theta: return theta;
    }
    return theta;
}

bool needs_y_star(RateTag tag) {
    return tag == RateTag::FiniteActivityNegativeD || tag == RateTag::NegativeDParabolic;
}

SolverOptions solver_options(const GridConfig& g) {
    SolverOptions o;
    o.lcp = g.lcp;
    o.scheme = g.scheme;
    return o;
}

void check_ladder(const std::vector<double>& thetas, std::size_t min_points) {
    if (thetas.size() < min_points) {
        throw InvalidInput(fmt::format("theta ladder needs at least {} points", min_points));
    }
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        if (!(thetas[k] > 0.0)) throw InvalidInput("theta ladder entries must be > 0");
        if (k > 0 && !(thetas[k] < thetas[k - 1])) {
            throw InvalidInput("theta ladder must be strictly decreasing");
        }
    }
}

std::string grid_tag(const GridConfig& g) {
    return fmt::format("{}/{}", g.scheme == TimeScheme::Bdf2 ? "bdf2" : "euler",
                       g.lcp == LcpMethod::Psor ? "psor" : "brennan-schwartz");
}

}  // namespace

std::string to_string(Regressor r) {
    switch (r) {
        case Regressor::InverseLog: return "1/|ln theta|";
        case Regressor::SqrtTheta: return "sqrt(theta)";
        case Regressor::Theta: return "theta";
    }
    return "?";
}

std::vector<double> theta_ladder(double theta_max, double theta_min, int n) {
    if (!(theta_max > theta_min && theta_min > 0.0) || n < 2) {
        throw InvalidInput("theta ladder needs theta_max > theta_min > 0 and n >= 2");
    }
    std::vector<double> out(n);
    const double ratio = std::log(theta_min / theta_max) / (n - 1);
    for (int k = 0; k < n; ++k) out[k] = theta_max * std::exp(ratio * k);
    out.front() = theta_max;
    out.back() = theta_min;
    return out;
}

Experiment experiment_from_config(const Config& config) {
    Experiment e(config.model);
    e.strike = config.option.strike;
    e.maturity = config.option.maturity;
    const auto& x = config.experiment;
    e.thetas = theta_ladder(x.theta_max, x.theta_min, x.n_theta);
    e.grid = config.grid;
    if (x.expect_rate) e.expected = rate_tag_from_string(*x.expect_rate);
    e.tolerance = x.tolerance;
    e.y_star = x.y_star;
    e.growth = x.growth;
    e.stopping_dx = x.stopping_dx;
    e.expansion_thetas = x.expansion_thetas;
    e.expansion_multiples = x.expansion_multiples;
    return e;
}

double resolve_y_star(const Experiment& exp, const AsymptoticParams& params) {
    if (exp.y_star) return *exp.y_star;
    StoppingGrid grid;
    grid.dx = exp.stopping_dx;
    if (params.lambda == 0.0) return v_zero(grid).y_star;
    StoppingProblem pb{params.lambda, params.beta, exp.growth, grid};
    return y_star(pb);
}

RateReport run_rate_experiment(const Experiment& exp) {
    check_ladder(exp.thetas, 6);
    RateReport rep;
    rep.params = asymptotic_params(exp.model, exp.strike);
    rep.tag = rep.params.regime.applicable_rate;
    if (exp.expected && *exp.expected != rep.tag) {
        throw RegimeMismatch(fmt::format("expected rate {} but the model classifies as {}",
                                         to_string(*exp.expected), to_string(rep.tag)));
    }
    if (rep.tag == RateTag::None) throw UnsupportedRegime("no rate law applies to this model");
    if (needs_y_star(rep.tag)) rep.params.y_star = resolve_y_star(exp, rep.params);
    rep.regressor = regressor_for(rep.tag);
    rep.tolerance = exp.tolerance.value_or(rep.regressor == Regressor::SqrtTheta ? 0.15 : 0.2);

    rep.scheme = grid_tag(exp.grid);
    const double limit = rep.params.b_limit;
    const SolverOptions opts = solver_options(exp.grid);
    for (double theta : exp.thetas) {
        RateRow row;
        row.theta = theta;
        try {
            const RatePrediction pred = rate_formula(rep.params, theta);
            const Grid g = near_maturity_grid(exp.model, exp.strike, limit, theta, pred.gap,
                                              exp.grid.near_n_t, exp.grid.points_per_scale);
            const PriceSurface surf = solve(exp.model, exp.strike, g, opts);
            const BoundaryCurve curve = extract_boundary(surf);
            row.b = curve.b.back();
            row.gap = limit - row.b;
            row.predicted = pred.gap;
            row.ratio = row.gap / pred.denominator;
            row.resolution = curve.resolution.back();
            row.c = std::abs(row.gap - pred.gap) / std::sqrt(theta);
            row.n_x = g.n_x;
            row.n_steps = static_cast<int>(surf.tau.size()) - 1;
            row.dx = g.dx();
            row.lcp_residual = surf.max_complementarity_residual;
            if (!(std::isfinite(row.ratio) && row.ratio > 0.0)) {
                row.error = fmt::format("non-positive ratio {}", row.ratio);
            }
        } catch (const Error& e) {
            row.error = e.what();
        }
        rep.rows.push_back(row);
    }

    std::vector<const RateRow*> ok;
    for (const auto& r : rep.rows) {
        if (r.ok()) ok.push_back(&r);
    }
    if (ok.size() < 6) {
        rep.note = fmt::format("only {} rows solved; need 6 for the fit", ok.size());
        return rep;
    }
    const std::size_t n_fit = std::max<std::size_t>(6, ok.size() / 2);
    const std::vector<const RateRow*> fit(ok.end() - static_cast<std::ptrdiff_t>(n_fit), ok.end());
    rep.fit_points = static_cast<int>(n_fit);

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto* r : fit) {
        const double x = regressor_value(rep.regressor, r->theta);
        sx += x;
        sy += r->ratio;
        sxx += x * x;
        sxy += x * r->ratio;
    }
    const double n = static_cast<double>(n_fit);
    const double den = n * sxx - sx * sx;
    rep.slope = den != 0.0 ? (n * sxy - sx * sy) / den : 0.0;
    rep.intercept = (sy - rep.slope * sx) / n;
    double ss = 0.0;
    for (const auto* r : fit) {
        const double e = r->ratio - (rep.intercept + rep.slope * regressor_value(rep.regressor, r->theta));
        ss += e * e;
    }
    rep.fit_residual = std::sqrt(ss / n);

    const std::size_t half = n_fit / 2;
    for (std::size_t k = 0; k < n_fit; ++k) {
        double& slot = k < half ? rep.c_mid : rep.c_low;
        slot = std::max(slot, fit[k]->c);
        if (k >= half) rep.c_floor = std::max(rep.c_floor, fit[k]->resolution / std::sqrt(fit[k]->theta));
    }
    // a residual inside one grid cell cannot tell growth from noise
    rep.c_stable = rep.c_low <= std::max(1.25 * rep.c_mid, rep.c_floor);

    const bool in_band = std::abs(rep.intercept - 1.0) <= rep.tolerance;
    const bool log_rate = rep.regressor == Regressor::InverseLog && exp.model.sigma() > 0.0;
    rep.pass = in_band && (!log_rate || rep.c_stable);
    rep.note = fmt::format("intercept {:.4f} {} [{:.2f}, {:.2f}]", rep.intercept,
                           in_band ? "inside" : "outside", 1.0 - rep.tolerance,
                           1.0 + rep.tolerance);
    if (log_rate) {
        rep.note += fmt::format("; c mid {:.4g} low {:.4g} floor {:.4g} {}", rep.c_mid, rep.c_low,
                                rep.c_floor, rep.c_stable ? "stable" : "growing");
    }
    return rep;
}

ExpansionReport run_expansion_experiment(const Experiment& exp) {
    check_ladder(exp.expansion_thetas, 2);
    if (exp.expansion_multiples.empty()) throw InvalidInput("no expansion offsets given");
    ExpansionReport rep;
    rep.params = asymptotic_params(exp.model, exp.strike);
    if (rep.params.regime.boundary_limit != BoundaryLimit::Xi) {
        throw UnsupportedRegime("the expansion experiment needs a model with d < 0");
    }
    if (!(exp.model.sigma() > 0.0)) throw UnsupportedRegime("the expansion needs sigma > 0");
    rep.y_star = resolve_y_star(exp, rep.params);
    rep.params.y_star = rep.y_star;

    StoppingGrid sgrid;
    sgrid.dx = exp.stopping_dx;
    const StoppingValue v =
        rep.params.lambda == 0.0
            ? v_zero(sgrid)
            : v_lambda_beta({rep.params.lambda, rep.params.beta, exp.growth, sgrid});

    const double sigma = exp.model.sigma();
    const double b = rep.params.b_limit;
    for (double m : exp.expansion_multiples) {
        if (!(m > 0.0)) throw InvalidInput("expansion multiples must be > 0");
        rep.series.push_back({m, -m * sigma * rep.y_star, m < 1.0, false});
    }

    const SolverOptions opts = solver_options(exp.grid);
    for (double theta : exp.expansion_thetas) {
        std::string failure;
        PriceSurface surf;
        try {
            const double gap = rep.y_star * sigma * b * std::sqrt(theta);
            // twice the rate resolution: the residual is a small fraction of theta^{3/2}
            const Grid g = near_maturity_grid(exp.model, exp.strike, b, theta, gap,
                                              2 * exp.grid.near_n_t,
                                              2.0 * exp.grid.points_per_scale);
            surf = solve(exp.model, exp.strike, g, opts);
        } catch (const Error& e) {
            failure = e.what();
        }
        for (const auto& s : rep.series) {
            ExpansionRow row;
            row.multiple = s.multiple;
            row.a = s.a;
            row.theta = theta;
            row.spot = b * std::exp(s.a * std::sqrt(theta));
            row.payoff = std::max(exp.strike - row.spot, 0.0);
            row.error = failure;
            if (failure.empty()) {
                row.price = surf.value_at(surf.tau.size() - 1, row.spot);
                row.expansion = second_order_expansion(rep.params, s.a, theta, v.at(s.a / sigma));
                row.residual = std::abs(row.price - (s.above_threshold ? row.expansion : row.payoff));
                row.scaled = row.residual / std::pow(theta, 1.5);
            }
            rep.rows.push_back(row);
        }
    }

    rep.pass = true;
    for (auto& s : rep.series) {
        std::vector<const ExpansionRow*> rows;
        bool failed = false;
        for (const auto& r : rep.rows) {
            if (r.multiple != s.multiple) continue;
            failed = failed || !r.error.empty();
            rows.push_back(&r);
        }
        bool all_zero = true;
        bool strict = true;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            all_zero = all_zero && rows[k]->residual <= 1e-12 * exp.strike;
            if (k > 0 && !(rows[k]->scaled < rows[k - 1]->scaled)) strict = false;
        }
        s.decreasing = !failed && (strict || all_zero);
        rep.pass = rep.pass && s.decreasing;
    }

    // Desk calibration figure: expansion against the PIDE premium at the largest theta.
    for (const auto& r : rep.rows) {
        if (r.theta == exp.expansion_thetas.front() && r.multiple == 0.5 && r.error.empty()) {
            const double premium = r.price - r.payoff;
            if (premium > 0.0) rep.top_relative_error = std::abs(r.expansion - r.price) / premium;
        }
    }
    return rep;
}

void write_rates_csv(const std::string& path, const RateReport& report) {
    CsvWriter w(path, {"theta", "b", "gap", "predicted", "ratio", "resolution", "c", "n_x",
                       "n_steps", "dx", "lcp_residual", "rate", "scheme", "version", "error"});
    const std::string tag = to_string(report.tag);
    for (const auto& r : report.rows) {
        w.row({CsvWriter::num(r.theta), CsvWriter::num(r.b), CsvWriter::num(r.gap),
               CsvWriter::num(r.predicted), CsvWriter::num(r.ratio), CsvWriter::num(r.resolution),
               CsvWriter::num(r.c), CsvWriter::num(static_cast<long long>(r.n_x)),
               CsvWriter::num(static_cast<long long>(r.n_steps)), CsvWriter::num(r.dx),
               CsvWriter::num(r.lcp_residual), tag, report.scheme, kVersion, r.error});
    }
}

void write_expansion_csv(const std::string& path, const ExpansionReport& report) {
    CsvWriter w(path, {"multiple", "a", "theta", "spot", "price", "payoff", "expansion",
                       "residual", "scaled", "y_star", "version", "error"});
    for (const auto& r : report.rows) {
        w.row({CsvWriter::num(r.multiple), CsvWriter::num(r.a), CsvWriter::num(r.theta),
               CsvWriter::num(r.spot), CsvWriter::num(r.price), CsvWriter::num(r.payoff),
               CsvWriter::num(r.expansion), CsvWriter::num(r.residual), CsvWriter::num(r.scaled),
               CsvWriter::num(report.y_star), kVersion, r.error});
    }
}

}  // namespace levylab
