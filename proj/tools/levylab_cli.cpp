// levylab: command-line driver for the near-maturity American put experiments.
//
//   levylab <price|boundary|rates|xi|ystar|expansion|regime> --config FILE [--out DIR] [--seed N]
//
// Exit status: 0 success, 1 input or numerical error, 2 an experiment ran and FAILed.

#include "levylab/american_pide.hpp"
#include "levylab/asymptotics.hpp"
#include "levylab/config.hpp"
#include "levylab/csv.hpp"
#include "levylab/errors.hpp"
#include "levylab/european.hpp"
#include "levylab/harness.hpp"
#include "levylab/simulation.hpp"
#include "levylab/stopping_value.hpp"
#include "levylab/version.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace levylab;

namespace {

struct Args {
    std::string config;
    std::string out = ".";
    std::uint64_t seed = 20240601;
    std::optional<double> lambda;
    std::optional<double> beta;
    int mc_paths = -1;
};

std::string out_path(const Args& a, const std::string& name) {
    fs::create_directories(a.out);
    return (fs::path(a.out) / name).string();
}

int cmd_regime(const Config& c) {
    const RegimeReport rep = classify_regime(c.model, c.option.strike);
    std::cout << describe(rep) << '\n';
    return 0;
}

int cmd_xi(const Config& c) {
    std::cout << fmt::format("xi={:.6g}", xi_limit(c.model, c.option.strike)) << '\n';
    return 0;
}

int cmd_price(const Config& c, const Args& a) {
    const double k = c.option.strike;
    const double s = c.option.spot;
    const double t = c.option.maturity;
    const EuropeanQuote eu = price_european_put(c.model, t, s, k);

    SolverOptions opts;
    opts.lcp = c.grid.lcp;
    opts.scheme = c.grid.scheme;
    const Grid g = full_grid(c.grid, k, t);
    const PriceSurface surf = solve(c.model, k, g, opts);
    const double am = surf.value_at(surf.tau.size() - 1, s);

    // Monte Carlo European as an independent check on the Fourier quote.
    const int n = a.mc_paths > 0 ? a.mc_paths : c.experiment.mc_paths;
    const auto x = simulate_increments(c.model, t, static_cast<std::size_t>(n), a.seed);
    const double disc = std::exp(-c.model.r() * t);
    const double fwd = (c.model.r() - c.model.delta()) * t;
    double sum = 0.0, sum2 = 0.0;
    for (double xi : x) {
        const double p = disc * std::max(k - s * std::exp(fwd + xi), 0.0);
        sum += p;
        sum2 += p * p;
    }
    const double mean = sum / n;
    const double se = std::sqrt(std::max(sum2 / n - mean * mean, 0.0) / n);

    std::cout << fmt::format("european={:.6f} american={:.6f} premium={:.6f} mc={:.6f}+-{:.6f}\n",
                             eu.value, am, am - eu.value, mean, se);
    CsvWriter w(out_path(a, "price.csv"),
                {"spot", "strike", "maturity", "european", "american", "premium", "mc",
                 "mc_stderr", "seed", "n_x", "n_t", "version"});
    w.row({CsvWriter::num(s), CsvWriter::num(k), CsvWriter::num(t), CsvWriter::num(eu.value),
           CsvWriter::num(am), CsvWriter::num(am - eu.value), CsvWriter::num(mean),
           CsvWriter::num(se), std::to_string(a.seed), CsvWriter::num(static_cast<long long>(g.n_x)),
           CsvWriter::num(static_cast<long long>(g.n_t)), kVersion});
    return 0;
}

int cmd_boundary(const Config& c, const Args& a) {
    const double k = c.option.strike;
    SolverOptions opts;
    opts.lcp = c.grid.lcp;
    opts.scheme = c.grid.scheme;
    const Grid g = full_grid(c.grid, k, c.option.maturity);
    PriceSurface surf = solve(c.model, k, g, opts);
    const BoundaryCurve curve = extract_boundary(surf);
    write_boundary_csv(out_path(a, "boundary.csv"), curve);

    const SurfaceDiagnostics diag = diagnose_surface(surf);
    std::cout << fmt::format("slices={} b(t=0)={:.6f} b(T-{:.3g})={:.6f} residual={:.3e}\n",
                             curve.t.size(), curve.b.back(), surf.tau[1], curve.b[1],
                             surf.max_complementarity_residual);
    if (diag.total() > 0) {
        std::cerr << fmt::format("shape check failed ({} violations): {}\n", diag.total(),
                                 diag.first_failure);
        return 2;
    }
    return 0;
}

int cmd_rates(const Config& c, const Args& a) {
    const Experiment e = experiment_from_config(c);
    const RateReport rep = run_rate_experiment(e);
    write_rates_csv(out_path(a, "rates.csv"), rep);
    std::cout << fmt::format("rate={} regressor={} fit_points={}\n", to_string(rep.tag),
                             to_string(rep.regressor), rep.fit_points);
    for (const auto& r : rep.rows) {
        if (r.ok()) {
            std::cout << fmt::format("theta={:.4e} b={:.6f} gap={:.6f} predicted={:.6f} ratio={:.4f}\n",
                                     r.theta, r.b, r.gap, r.predicted, r.ratio);
        } else {
            std::cout << fmt::format("theta={:.4e} error: {}\n", r.theta, r.error);
        }
    }
    std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.note << '\n';
    return rep.pass ? 0 : 2;
}

int cmd_expansion(const Config& c, const Args& a) {
    const Experiment e = experiment_from_config(c);
    const ExpansionReport rep = run_expansion_experiment(e);
    write_expansion_csv(out_path(a, "expansion.csv"), rep);
    std::cout << fmt::format("y_star={:.6f}\n", rep.y_star);
    for (const auto& s : rep.series) {
        std::cout << fmt::format("a={:.6f} ({}) {}\n", s.a,
                                 s.above_threshold ? "vs expansion" : "vs payoff",
                                 s.decreasing ? "decreasing" : "NOT decreasing");
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << '\n';
    return rep.pass ? 0 : 2;
}

int cmd_ystar(const Config& c, const Args& a) {
    StoppingGrid grid;
    grid.dx = c.experiment.stopping_dx;
    StoppingValue v;
    if (a.lambda || a.beta) {
        const StoppingProblem pb{a.lambda.value_or(0.0), a.beta.value_or(0.0), c.experiment.growth,
                                 grid};
        v = v_lambda_beta(pb);
    } else {
        v = v_zero(grid);
    }
    write_stopping_csv(out_path(a, "ystar.csv"), v);
    std::cout << fmt::format("y_star={:.6f} uncertainty={:.1e} method={}\n", v.y_star,
                             v.y_star_uncertainty,
                             v.method == StoppingMethod::ObstaclePde ? "obstacle-pde" : "lattice");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Near-maturity American put experiments under exponential Levy models"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Args args;
    app.add_option("--config", args.config, "INI file with [model] [option] [grid] [experiment]")
        ->required();
    app.add_option("--out", args.out, "output directory for CSV reports");
    app.add_option("--seed", args.seed, "seed for Monte Carlo checks");

    auto* price = app.add_subcommand("price", "European and American quote at the configured spot");
    price->add_option("--mc-paths", args.mc_paths, "paths for the Monte Carlo check");
    auto* boundary = app.add_subcommand("boundary", "solve to maturity and write boundary.csv");
    auto* rates = app.add_subcommand("rates", "boundary gap against the predicted rate");
    auto* xi = app.add_subcommand("xi", "boundary limit for d < 0");
    auto* ystar = app.add_subcommand("ystar", "threshold of the auxiliary stopping problem");
    ystar->add_option("--lambda", args.lambda, "Poisson intensity (lattice solver)");
    ystar->add_option("--beta", args.beta, "local-time weight (lattice solver)");
    auto* expansion = app.add_subcommand("expansion", "second-order price expansion check");
    auto* regime = app.add_subcommand("regime", "classification echo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const Config config = load_config(args.config);
        if (*regime) return cmd_regime(config);
        if (*xi) return cmd_xi(config);
        if (*price) return cmd_price(config, args);
        if (*boundary) return cmd_boundary(config, args);
        if (*rates) return cmd_rates(config, args);
        if (*expansion) return cmd_expansion(config, args);
        if (*ystar) return cmd_ystar(config, args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
