#include "levylab/config.hpp"
#include "levylab/errors.hpp"
#include "levylab/harness.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace levylab;

namespace {

Config parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string first_line(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

TEST(Config, ParsesAllSections) {
    const Config c = parse(
        "[model]\nkind = kou\nr = 0.05\ndelta = 0.04\nsigma = 0.2\nlambda_up = 0.5\neta_up = 5\n"
        "lambda_down = 0.5\neta_down = 8\n[option]\nstrike = 50\n[grid]\nn_x = 501\nlcp = psor\n"
        "scheme = euler\n[experiment]\nn_theta = 8\nexpect_rate = Thm5.4\n"
        "expansion_thetas = 0.01, 0.005\n");
    EXPECT_EQ(c.model.kind(), "kou");
    EXPECT_DOUBLE_EQ(c.option.strike, 50.0);
    EXPECT_DOUBLE_EQ(c.option.spot, 50.0);
    EXPECT_EQ(c.grid.n_x, 501);
    EXPECT_EQ(c.grid.lcp, LcpMethod::Psor);
    EXPECT_EQ(c.grid.scheme, TimeScheme::ImplicitEuler);
    EXPECT_EQ(c.experiment.n_theta, 8);
    ASSERT_TRUE(c.experiment.expect_rate);
    EXPECT_EQ(*c.experiment.expect_rate, "Thm5.4");
    EXPECT_EQ(c.experiment.expansion_thetas.size(), 2u);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(parse("[model]\nkind = bs\nr = 0.05\nsigma = 0.2\nsgima = 1\n"), InvalidInput);
    EXPECT_THROW(parse("[model]\nkind = bs\nr = 0.05\nsigma = 0.2\n[extra]\na = 1\n"), InvalidInput);
    EXPECT_THROW(parse("[model]\nkind = bs\nr = abc\nsigma = 0.2\n"), InvalidInput);
    EXPECT_THROW(parse("[option]\nstrike = 100\n"), InvalidInput);
    EXPECT_THROW(parse("[model]\nkind = heston\nr = 0.05\n"), InvalidInput);
    EXPECT_THROW(load_config("/nonexistent/levylab.ini"), InvalidInput);
}

TEST(Config, ShippedConfigsLoad) {
    for (const auto& e : std::filesystem::directory_iterator(LEVYLAB_CONFIG_DIR)) {
        EXPECT_NO_THROW(load_config(e.path().string())) << e.path();
    }
}

TEST(Config, Atoms) {
    const auto a = parse_atoms("0.5:0.1, -0.2:0.3");
    ASSERT_EQ(a.size(), 2u);
    EXPECT_DOUBLE_EQ(a[1].location, -0.2);
    EXPECT_DOUBLE_EQ(a[1].weight, 0.3);
    EXPECT_THROW(parse_atoms("0.5"), InvalidInput);
}

TEST(Config, FullGrid) {
    GridConfig g;
    const Grid full = full_grid(g, 100.0, 0.5);
    EXPECT_NEAR(full.x_min, std::log(100.0) - 2.0, 1e-15);
    EXPECT_NEAR(full.x_max, std::log(100.0) + 2.0, 1e-15);
    EXPECT_EQ(full.n_x, 2001);
    EXPECT_DOUBLE_EQ(full.T, 0.5);
}

TEST(Harness, ThetaLadder) {
    const auto t = theta_ladder(1e-1, 1e-4, 4);
    ASSERT_EQ(t.size(), 4u);
    EXPECT_DOUBLE_EQ(t.front(), 1e-1);
    EXPECT_NEAR(t[1], 1e-2, 1e-15);
    EXPECT_NEAR(t.back(), 1e-4, 1e-18);
}

TEST(Harness, ExpectedTagMismatchThrows) {
    Experiment e(LevyModel(0.05, 0.0, 0.2));
    e.thetas = theta_ladder(1e-1, 1e-3, 6);
    e.expected = RateTag::NegativeDParabolic;
    EXPECT_THROW(run_rate_experiment(e), RegimeMismatch);
}

TEST(Harness, BlackScholesRatesAndCsv) {
    Experiment e(LevyModel(0.05, 0.0, 0.2));
    e.thetas = theta_ladder(1e-1, 1e-4, 12);
    const RateReport r = run_rate_experiment(e);
    EXPECT_EQ(r.tag, RateTag::DiffusiveLogRate);
    EXPECT_EQ(r.regressor, Regressor::InverseLog);
    EXPECT_GE(r.fit_points, 6);
    for (const auto& row : r.rows) {
        EXPECT_TRUE(row.ok()) << row.error;
        EXPECT_GT(row.gap, 0.0);
    }
    EXPECT_NEAR(r.intercept, 1.0, 0.2);

    const auto dir = std::filesystem::temp_directory_path() / "levylab_unit_csv";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "rates.csv").string();
    write_rates_csv(path, r);
    EXPECT_EQ(first_line(path),
              "theta,b,gap,predicted,ratio,resolution,c,n_x,n_steps,dx,lcp_residual,rate,scheme,version,error");
}

TEST(Harness, ExperimentFromConfig) {
    const Config c = parse("[model]\nkind = bs\nr = 0.05\nsigma = 0.2\n[experiment]\nn_theta = 7\n"
                           "tolerance = 0.1\n");
    const Experiment e = experiment_from_config(c);
    EXPECT_EQ(e.thetas.size(), 7u);
    ASSERT_TRUE(e.tolerance);
    EXPECT_DOUBLE_EQ(*e.tolerance, 0.1);
}
