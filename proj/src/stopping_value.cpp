#include "levylab/stopping_value.hpp"

#include "levylab/csv.hpp"
#include "levylab/errors.hpp"
#include "levylab/lcp.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace levylab {

namespace {

struct Nodes {
    std::vector<double> x;
    std::size_t zero = 0;
};

Nodes make_nodes(const StoppingGrid& g) {
    if (!(g.dx > 0.0) || !(g.x_min < 0.0 && g.x_max > 0.0)) {
        throw InvalidInput("stopping grid must straddle 0 with a positive step");
    }
    const double fz = -g.x_min / g.dx;
    const double fm = (g.x_max - g.x_min) / g.dx;
    if (std::abs(fz - std::round(fz)) > 1e-6 || std::abs(fm - std::round(fm)) > 1e-6) {
        throw InvalidInput("stopping grid endpoints must be multiples of dx");
    }
    Nodes n;
    const auto m = static_cast<std::size_t>(std::llround(fm));
    n.zero = static_cast<std::size_t>(std::llround(fz));
    n.x.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) n.x[i] = g.x_min + static_cast<double>(i) * g.dx;
    n.x[n.zero] = 0.0;
    return n;
}

/// -(sign change of v), from sqrt(v) extrapolated off the first two positive nodes.
void locate_threshold(StoppingValue& out, double dx) {
    const auto& v = out.v;
    const double vmax = *std::max_element(v.begin(), v.end());
    const double tol = 1e-13 * std::max(1.0, vmax);
    std::size_t j = 0;
    while (j < v.size() && !(v[j] > tol)) ++j;
    if (j == 0 || j + 1 >= v.size()) {
        throw GridTooCoarse("stopping value has no zero region or no positive region on the grid");
    }
    const double r1 = std::sqrt(v[j]);
    const double r2 = std::sqrt(v[j + 1]);
    const double floor_y = out.y[j > 1 ? j - 2 : 0];
    double xs = out.y[j - 1];
    if (r2 > r1) xs = out.y[j] - r1 * dx / (r2 - r1);
    xs = std::clamp(xs, floor_y, out.y[j]);
    out.y_star = -xs;
    out.y_star_uncertainty = 0.5 * dx;
}

StoppingValue solve_obstacle_pde(const StoppingGrid& grid, int n_steps) {
    const Nodes nodes = make_nodes(grid);
    const std::size_t m = nodes.x.size() - 1;
    const double dx = grid.dx;
    const double a = 0.5 / (dx * dx);

    // Rannacher start: the first two steps become four implicit half-steps.
    std::vector<std::pair<double, double>> plan;  // (dt, theta)
    const double h = 1.0 / n_steps;
    for (int k = 0; k < 4; ++k) plan.emplace_back(0.5 * h, 1.0);
    for (int k = 2; k < n_steps; ++k) plan.emplace_back(h, 0.5);

    std::vector<double> w(m + 1, 0.0);
    std::vector<double> next(m + 1, 0.0);
    std::vector<double> rhs(m + 1, 0.0);
    const std::vector<double> zero(m + 1, 0.0);
    Tridiagonal mat(m + 1);
    double tau = 0.0;
    double worst = 0.0;
    for (const auto& [dt, th] : plan) {
        tau += dt;
        for (std::size_t i = 1; i < m; ++i) {
            mat.lower[i] = -th * a;
            mat.diag[i] = 1.0 / dt + 2.0 * th * a;
            mat.upper[i] = -th * a;
            const double lap = w[i + 1] - 2.0 * w[i] + w[i - 1];
            rhs[i] = w[i] / dt + (1.0 - th) * a * lap + nodes.x[i];
        }
        mat.diag[0] = 1.0;
        mat.upper[0] = 0.0;
        rhs[0] = 0.0;
        mat.diag[m] = 1.0;
        mat.lower[m] = 0.0;
        rhs[m] = nodes.x[m] * tau;
        brennan_schwartz(mat, rhs, zero, next);
        worst = std::max(worst, complementarity_residual(mat, rhs, zero, next));
        w.swap(next);
    }
    StoppingValue out;
    out.y = nodes.x;
    out.v = w;
    out.method = StoppingMethod::ObstaclePde;
    out.residual = worst;
    locate_threshold(out, dx);
    return out;
}

StoppingValue solve_lattice(const StoppingProblem& pb) {
    if (!(pb.lambda >= 0.0) || !(pb.beta >= 0.0) || !std::isfinite(pb.lambda) ||
        !std::isfinite(pb.beta)) {
        throw InvalidInput("lambda and beta must be finite and >= 0");
    }
    const Nodes nodes = make_nodes(pb.grid);
    const std::size_t m = nodes.x.size() - 1;
    const double dx = pb.grid.dx;
    const auto n_steps = static_cast<long>(std::llround(1.0 / (dx * dx)));
    const double dt = 1.0 / static_cast<double>(n_steps);
    const double lam = pb.lambda;
    const double sw = lam * dt;
    if (sw > 1.0) throw InvalidInput("lambda * dt must not exceed 1");
    const bool phase_one = lam > 0.0 && pb.beta > 0.0;

    std::vector<double> f(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        f[i] = nodes.x[i] + lam * pb.beta * std::max(nodes.x[i], 0.0);
    }
    const double x_top = nodes.x[m];
    auto top_value = [&](double t) {
        const double w = lam > 0.0
                             ? std::exp(lam * t) * (std::exp(-2.0 * lam * t) - std::exp(-2.0 * lam)) /
                                   (2.0 * lam)
                             : 1.0 - t;
        return (1.0 + lam * pb.beta) * x_top * w;
    };

    std::vector<double> v0(m + 1, 0.0);
    std::vector<double> v1(m + 1, 0.0);
    std::vector<double> n0(m + 1, 0.0);
    std::vector<double> n1(m + 1, 0.0);
    for (long n = n_steps - 1; n >= 0; --n) {
        const double t = static_cast<double>(n) * dt;
        const double disc = std::exp(-lam * t);
        if (phase_one) {
            const double growth =
                pb.growth == PhaseOneGrowth::Growing ? std::exp(lam * t) : std::exp(-lam * t);
            for (std::size_t i = 1; i < m; ++i) {
                const double e1 = 0.5 * (v1[i - 1] + v1[i + 1]);
                n1[i] = e1;
            }
            // Tanaka increment of the local time at 0 seen from the node: dx/2 per visit.
            n1[nodes.zero] += pb.beta * growth * 0.5 * dx;
            for (std::size_t i = 1; i < m; ++i) {
                const double e0 = 0.5 * (v0[i - 1] + v0[i + 1]);
                const double e1 = 0.5 * (v1[i - 1] + v1[i + 1]);
                n0[i] = std::max(0.0, disc * f[i] * dt + (1.0 - sw) * e0 + sw * e1);
            }
            n1[0] = 0.0;
            n1[m] = 0.0;
            v1.swap(n1);
        } else {
            for (std::size_t i = 1; i < m; ++i) {
                const double e0 = 0.5 * (v0[i - 1] + v0[i + 1]);
                n0[i] = std::max(0.0, disc * f[i] * dt + (1.0 - sw) * e0);
            }
        }
        n0[0] = 0.0;
        n0[m] = top_value(t);
        v0.swap(n0);
    }
    StoppingValue out;
    out.y = nodes.x;
    out.v = v0;
    out.method = StoppingMethod::LatticeDp;
    locate_threshold(out, dx);
    return out;
}

}  // namespace

double StoppingValue::at(double q) const {
    if (y.empty()) return 0.0;
    if (q <= y.front()) return v.front();
    if (q >= y.back()) return v.back() + (q - y.back());
    const double dx = (y.back() - y.front()) / static_cast<double>(y.size() - 1);
    const double f = (q - y.front()) / dx;
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(f), y.size() - 2);
    const double u = f - static_cast<double>(i);
    return (1.0 - u) * v[i] + u * v[i + 1];
}

StoppingValue v_zero(const StoppingGrid& grid, int n_steps) {
    if (n_steps < 10) throw InvalidInput("obstacle solver needs at least 10 steps");
    StoppingValue coarse = solve_obstacle_pde(grid, n_steps);
    StoppingGrid fine_grid = grid;
    fine_grid.dx = 0.5 * grid.dx;
    const StoppingValue fine = solve_obstacle_pde(fine_grid, 2 * n_steps);
    if (std::abs(fine.y_star - coarse.y_star) > grid.dx) {
        throw GridTooCoarse(fmt::format("y* moved from {} to {} under refinement", coarse.y_star,
                                        fine.y_star));
    }
    return coarse;
}

StoppingValue v_lambda_beta(const StoppingProblem& problem, bool check_convergence) {
    StoppingValue out = solve_lattice(problem);
    if (check_convergence) {
        StoppingProblem fine = problem;
        fine.grid.dx = 0.5 * problem.grid.dx;
        const StoppingValue ref = solve_lattice(fine);
        const double vmax = *std::max_element(out.v.begin(), out.v.end());
        for (std::size_t i = 0; i < out.y.size(); ++i) {
            if (std::abs(ref.at(out.y[i]) - out.v[i]) > 0.01 * vmax) {
                throw Unconverged(fmt::format("lattice value moved by more than 1% at y = {}",
                                              out.y[i]));
            }
        }
    }
    return out;
}

double y_star(const StoppingProblem& problem) { return solve_lattice(problem).y_star; }

double lattice_local_time_mean(double dx) {
    if (!(dx > 0.0 && dx < 1.0)) throw InvalidInput("dx must lie in (0, 1)");
    const auto n_steps = static_cast<long>(std::llround(1.0 / (dx * dx)));
    // P(S_{2m} = 0) = C(2m, m) / 4^m; visits happen at steps 0 .. n_steps - 1.
    double p = 1.0;
    double visits = 1.0;
    for (long mm = 1; 2 * mm <= n_steps - 1; ++mm) {
        p *= (2.0 * mm - 1.0) / (2.0 * mm);
        visits += p;
    }
    return dx * visits;
}

void write_stopping_csv(const std::string& path, const StoppingValue& value) {
    CsvWriter w(path, {"y", "v"});
    for (std::size_t i = 0; i < value.y.size(); ++i) {
        w.row({CsvWriter::num(value.y[i]), CsvWriter::num(value.v[i])});
    }
}

}  // namespace levylab
