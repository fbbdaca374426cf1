// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   levylab_acceptance [--only N] [--out DIR]

#include "levylab/american_pide.hpp"
#include "levylab/asymptotics.hpp"
#include "levylab/csv.hpp"
#include "levylab/errors.hpp"
#include "levylab/european.hpp"
#include "levylab/harness.hpp"
#include "levylab/levy_model.hpp"
#include "levylab/simulation.hpp"
#include "levylab/stopping_value.hpp"

#include "../oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace levylab;

namespace {

constexpr double kStrike = 100.0;
constexpr std::uint64_t kSeed = 20240601;

struct Named {
    std::string name;
    LevyModel model;
};

LevyModel bs() { return LevyModel(0.05, 0.0, 0.2); }
LevyModel kou_bm() { return LevyModel(0.05, 0.0, 0.2, {jumps::Kou{0.1, 20.0, 1.0, 10.0}, {}}); }
LevyModel cgmy_bm() {
    return LevyModel(0.05, 0.0, 0.2, {jumps::TemperedStable{0.0, 0.1, 5.0, 10.0, 0.5, 1.5}, {}});
}
LevyModel kou_neg() { return LevyModel(0.05, 0.04, 0.2, {jumps::Kou{0.5, 5.0, 0.5, 8.0}, {}}); }
LevyModel merton_bm() { return LevyModel(0.05, 0.0, 0.2, {jumps::Merton{1.0, -0.1, 0.15}, {}}); }
LevyModel vg_neg() { return LevyModel(0.05, 0.04, 0.2, {jumps::VarianceGamma{1.0, 10.0, 10.0}, {}}); }

// The 6-model matrix: three with d > 0 and sigma > 0, Merton, and two with d < 0.
std::vector<Named> matrix() {
    return {{"bs", bs()},          {"kou+bm", kou_bm()},      {"cgmy+bm", cgmy_bm()},
            {"kou d<0", kou_neg()}, {"merton+bm", merton_bm()}, {"vg+bm d<0", vg_neg()}};
}

std::vector<Named> zoo() {
    auto z = matrix();
    z.push_back({"vg pure jump", LevyModel(0.05, 0.0, 0.0, {jumps::VarianceGamma{1.0, 10.0, 10.0}, {}})});
    z.push_back({"cgmy y=0.5", LevyModel(0.05, 0.0, 0.0, {jumps::TemperedStable{0.5, 0.5, 5.0, 10.0, 0.5, 0.5}, {}})});
    z.push_back({"cgmy y=1.5+bm", LevyModel(0.05, 0.0, 0.2, {jumps::TemperedStable{0.05, 0.05, 5.0, 10.0, 1.5, 1.5}, {}})});
    z.push_back({"finite+atom", LevyModel(0.05, 0.05, 0.2,
                                          {jumps::FiniteActivity{1.0, {{-0.2, 0.5}, {0.1, 0.5}}},
                                           {{std::log(2.0), 0.05}}})});
    return z;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

// Surface shared by criteria 3 and 4: desk grid dx = 3e-3 on ln K -/+ 2, T = 1/2,
// with the near-maturity checkpoints on the time axis.
PriceSurface desk_surface(const LevyModel& m) {
    Grid g;
    g.x_min = std::log(kStrike) - 2.0;
    g.x_max = std::log(kStrike) + 2.0;
    g.n_x = 1335;
    g.T = 0.5;
    g.n_t = 400;
    g.checkpoints = {1e-4, 1e-3, 1e-2, 1e-1};
    return solve(m, kStrike, g);
}

Outcome martingale() {
    Outcome o{true, ""};
    int bad = 0;
    double worst_psi = 0.0;
    double worst_z = 0.0;
    for (const auto& [name, m] : zoo()) {
        const double psi = std::abs(characteristic_exponent(m, cplx(0.0, -1.0)));
        const auto x = simulate_increments(m, 1.0, 100000, kSeed);
        double s = 0.0, s2 = 0.0;
        for (double v : x) {
            const double e = std::exp(v);
            s += e;
            s2 += e * e;
        }
        const double n = static_cast<double>(x.size());
        const double mean = s / n;
        const double se = std::sqrt((s2 / n - mean * mean) / n);
        const double z = std::abs(mean - 1.0) / se;
        worst_psi = std::max(worst_psi, psi);
        worst_z = std::max(worst_z, z);
        if (!(psi < 1e-12 && z < 4.0)) {
            ++bad;
            o.detail += fmt::format(" {}: |psi(-i)|={:.1e} z={:.2f};", name, psi, z);
        }
    }
    o.pass = bad == 0;
    o.detail = fmt::format("{} models, max |psi(-i)|={:.1e}, max |z|={:.2f}", zoo().size(),
                           worst_psi, worst_z) + o.detail;
    return o;
}

Outcome pricing_oracles() {
    // American: PIDE against a 5000-step binomial tree.
    Grid g;
    g.x_min = std::log(kStrike) - 2.5;
    g.x_max = std::log(kStrike) + 2.0;
    g.n_x = 4001;
    g.T = 1.0;
    g.n_t = 800;
    const PriceSurface s = solve(bs(), kStrike, g);
    const double am = s.value_at(s.tau.size() - 1, 100.0);
    const double crr = oracle::crr_american_put(100.0, kStrike, 0.05, 0.0, 0.2, 1.0, 5000);
    const double am_err = std::abs(am - crr);

    double eu_err = 0.0;
    const LevyModel bsq(0.05, 0.02, 0.25);
    for (double t : {0.01, 0.25, 1.0, 2.0}) {
        for (double spot : {70.0, 90.0, 100.0, 110.0, 140.0}) {
            const double f = price_european_put(bsq, t, spot, kStrike).value;
            eu_err = std::max(eu_err, std::abs(f - oracle::bs_put(spot, kStrike, 0.05, 0.02, 0.25, t)));
        }
    }
    double mj_err = 0.0;
    for (double t : {0.1, 0.5, 1.0}) {
        for (double spot : {80.0, 100.0, 120.0}) {
            const double f = price_european_put(merton_bm(), t, spot, kStrike).value;
            const double ref = oracle::merton_put(spot, kStrike, 0.05, 0.0, 0.2, 1.0, -0.1, 0.15, t);
            mj_err = std::max(mj_err, std::abs(f - ref));
        }
    }
    const bool ok = am_err < 5e-3 && eu_err < 1e-6 && mj_err < 1e-6;
    return {ok, fmt::format("american {:.5f} vs binomial {:.5f} (|err| {:.1e} < 5e-3); "
                            "BS Fourier |err| {:.1e} < 1e-6; Merton |err| {:.1e} < 1e-6",
                            am, crr, am_err, eu_err, mj_err)};
}

Outcome structural() {
    int violations = 0;
    std::string first;
    auto flag = [&](const std::string& msg) {
        ++violations;
        if (first.empty()) first = msg;
    };
    for (const auto& [name, m] : matrix()) {
        PriceSurface s = desk_surface(m);
        const SurfaceDiagnostics d = diagnose_surface(s);
        if (d.total() > 0) flag(fmt::format("{}: {}", name, d.first_failure));
        try {
            premium(s, m);
        } catch (const BoundViolation& e) {
            flag(fmt::format("{}: {}", name, e.what()));
        }
        const BoundaryCurve c = extract_boundary(s);
        // b nondecreasing in t, up to one grid cell of extraction noise
        for (std::size_t j = 2; j < c.b.size(); ++j) {
            if (c.b[j] > c.b[j - 1] + c.resolution[j]) {
                flag(fmt::format("{}: b rises from {:.4f} to {:.4f} at tau {:.3g}", name,
                                 c.b[j - 1], c.b[j], c.tau[j]));
            }
        }
        for (double tau : {1e-3, 1e-2, 1e-1, 0.5}) {
            const std::size_t j = s.slice_near(tau);
            const double be = critical_price_european(m, s.tau[j], kStrike);
            if (!(be < kStrike) || c.b[j] > be + c.resolution[j]) {
                flag(fmt::format("{}: b {:.4f} vs b_e {:.4f} at tau {:.3g}", name, c.b[j], be,
                                 s.tau[j]));
            }
        }
    }
    return {violations == 0,
            fmt::format("{} violations over 6 surfaces{}", violations,
                        first.empty() ? "" : " (first: " + first + ")")};
}

Outcome limits() {
    int bad = 0;
    std::string detail;
    for (const auto& [name, m] : matrix()) {
        const RegimeReport r = classify_regime(m, kStrike);
        const PriceSurface s = desk_surface(m);
        const BoundaryCurve c = extract_boundary(s);
        const std::size_t j = s.slice_near(1e-4);
        const double gap = std::abs(r.limit_value - c.b[j]);
        const double ds = c.resolution[j];
        const bool ok = gap < 3.0 * ds;
        bad += ok ? 0 : 1;
        detail += fmt::format(" {} |b-{}|={:.3f}/{:.3f};", name,
                              r.boundary_limit == BoundaryLimit::Xi ? "xi" : "K", gap, 3.0 * ds);
    }
    return {bad == 0, "theta=1e-4, gap / 3 ds:" + detail};
}

Outcome rates_positive_d() {
    bool ok = true;
    std::string detail;
    for (const auto& [name, m] : std::vector<Named>{{"bs", bs()}, {"kou+bm", kou_bm()}, {"cgmy+bm", cgmy_bm()}}) {
        Experiment e(m);
        e.thetas = theta_ladder(1e-1, 1e-4, 16);
        e.expected = RateTag::DiffusiveLogRate;
        const RateReport r = run_rate_experiment(e);
        ok = ok && r.pass;
        detail += fmt::format(" {}: {} [{}];", name, r.note, r.pass ? "ok" : "fail");
    }
    return {ok, detail};
}

Outcome rates_negative_d() {
    StoppingGrid g;
    const double y_pde = v_zero(g).y_star;
    const double y_lat = y_star(StoppingProblem{});
    const double rel = std::abs(y_pde - y_lat) / y_pde;
    Experiment e(kou_neg());
    e.thetas = theta_ladder(1e-1, 1e-4, 16);
    e.expected = RateTag::NegativeDParabolic;
    e.y_star = y_pde;
    const RateReport r = run_rate_experiment(e);
    return {r.pass && rel < 0.01,
            fmt::format("kou d<0, y00 = {:.6f} (pde) / {:.6f} (lattice); {}", y_pde, y_lat, r.note)};
}

Outcome stopping() {
    StoppingGrid g;
    const StoppingValue pde = v_zero(g);
    const StoppingValue lat = v_lambda_beta(StoppingProblem{});
    double sup = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i < pde.y.size(); ++i) {
        if (std::abs(pde.y[i]) > 2.0 + 1e-12) continue;
        sup = std::max(sup, std::abs(pde.v[i] - lat.at(pde.y[i])));
        vmax = std::max(vmax, std::abs(pde.v[i]));
    }
    const double v_rel = sup / vmax;
    const double y_rel = std::abs(pde.y_star - lat.y_star) / pde.y_star;

    // Target E L_1(0) = E|W_1| by Tanaka's formula, estimated by Monte Carlo first.
    std::mt19937_64 rng(kSeed);
    std::normal_distribution<double> n01;
    double acc = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) acc += std::abs(n01(rng));
    const double mc = acc / n;
    const double exact = std::sqrt(2.0 / M_PI);
    const double lt = lattice_local_time_mean(g.dx);
    const double lt_rel = std::abs(lt - mc) / mc;
    const bool ok = v_rel < 0.01 && y_rel < 0.01 && lt_rel < 0.01 && std::abs(mc - exact) < 3e-3;
    return {ok, fmt::format("sup|v_pde - v_lat|/max v = {:.2e}; y00 {:.6f} vs {:.6f} ({:.2e}); "
                            "local time {:.6f} vs MC {:.6f} ({:.2e})",
                            v_rel, pde.y_star, lat.y_star, y_rel, lt, mc, lt_rel)};
}

Outcome expansion() {
    Experiment e(kou_neg());
    const ExpansionReport r = run_expansion_experiment(e);
    std::string detail = fmt::format("y*={:.6f}", r.y_star);
    for (const auto& s : r.series) {
        detail += fmt::format("; a={:.4f} {} {}", s.a, s.above_threshold ? "expansion" : "payoff",
                              s.decreasing ? "decreasing" : "NOT decreasing");
    }
    return {r.pass, detail};
}

Outcome clt() {
    const std::vector<double> times{1e-1, 1e-2, 1e-3};
    const CltDiagnostic d = small_time_clt_diagnostic(kou_bm(), times, 20000, kSeed, 200);
    std::string detail;
    for (const auto& r : d.rows) detail += fmt::format("KS(t={:g})={:.4f} ", r.t, r.ks);
    detail += fmt::format("; bootstrap 5% quantiles of successive drops {:.4f}, {:.4f}",
                          d.lower_quantiles.at(0), d.lower_quantiles.at(1));
    return {d.strictly_decreasing, detail};
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_suite(const fs::path& dir) {
    fs::create_directories(dir);
    Experiment pos(bs());
    pos.thetas = theta_ladder(1e-1, 1e-3, 8);
    write_rates_csv((dir / "rates.csv").string(), run_rate_experiment(pos));
    Experiment neg(kou_neg());
    write_expansion_csv((dir / "expansion.csv").string(), run_expansion_experiment(neg));
    const PriceSurface s = desk_surface(kou_neg());
    write_boundary_csv((dir / "boundary.csv").string(), extract_boundary(s));
    const std::vector<double> times{1e-1, 1e-2, 1e-3};
    const CltDiagnostic d = small_time_clt_diagnostic(kou_bm(), times, 5000, kSeed, 50);
    CsvWriter w((dir / "clt.csv").string(), {"t", "ks", "null_ks"});
    for (const auto& r : d.rows) w.row({CsvWriter::num(r.t), CsvWriter::num(r.ks), CsvWriter::num(r.null_ks)});
}

Outcome determinism(const fs::path& out) {
    const fs::path a = out / "run_a";
    const fs::path b = out / "run_b";
    fs::remove_all(a);
    fs::remove_all(b);
    write_suite(a);
    write_suite(b);
    int same = 0;
    std::string diff;
    for (const char* f : {"rates.csv", "expansion.csv", "boundary.csv", "clt.csv"}) {
        const std::string x = read_file(a / f);
        if (!x.empty() && x == read_file(b / f)) {
            ++same;
        } else {
            diff += std::string(" ") + f;
        }
    }
    return {same == 4, fmt::format("{}/4 CSV reports byte-identical across two runs{}", same,
                                   diff.empty() ? "" : " (differ:" + diff + ")")};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    fs::path out = fs::temp_directory_path() / "levylab_acceptance";
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--only" && i + 1 < argc) {
            only = std::stoi(argv[++i]);
        } else if (a == "--out" && i + 1 < argc) {
            out = argv[++i];
        } else {
            std::cerr << "usage: levylab_acceptance [--only N] [--out DIR]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "martingale normalization", 30, martingale},
        {2, "pricing oracles", 60, pricing_oracles},
        {3, "structural invariants", 600, structural},
        {4, "boundary limits", 600, limits},
        {5, "rate d>0, sigma>0", 1800, rates_positive_d},
        {6, "rate d<0", 1800, rates_negative_d},
        {7, "stopping solver consistency", 300, stopping},
        {8, "second-order expansion", 1200, expansion},
        {9, "small-time CLT", 120, clt},
        {10, "determinism", 600, [&] { return determinism(out); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > c.budget_s) {
            o.pass = false;
            o.detail += fmt::format("; over budget {:.0f}s", c.budget_s);
        }
        failed += o.pass ? 0 : 1;
        std::cout << fmt::format("{} {:2d} {:<28} {:7.1f}s  {}\n", o.pass ? "PASS" : "FAIL", c.id,
                                 c.title, dt, o.detail)
                  << std::flush;
    }
    return failed == 0 ? 0 : 1;
}
