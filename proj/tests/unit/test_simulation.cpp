#include "models.hpp"

#include "levylab/simulation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace levylab;
using namespace testmodels;

TEST(Simulation, SeededRunsRepeat) {
    const auto a = simulate_increments(kou_bm(), 0.5, 1000, 42);
    const auto b = simulate_increments(kou_bm(), 0.5, 1000, 42);
    const auto c = simulate_increments(kou_bm(), 0.5, 1000, 43);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(Simulation, GaussianMoments) {
    const auto x = simulate_increments(bs(), 2.0, 200000, 1);
    double s = 0.0, s2 = 0.0;
    for (double v : x) {
        s += v;
        s2 += v * v;
    }
    const double n = static_cast<double>(x.size());
    const double mean = s / n;
    const double var = s2 / n - mean * mean;
    EXPECT_NEAR(mean, -0.04, 4.0 * std::sqrt(0.08 / n));
    EXPECT_NEAR(var, 0.08, 0.08 * 0.02);
}

TEST(Simulation, ExponentialMartingale) {
    for (const auto& [name, m] : zoo()) {
        const auto x = simulate_increments(m, 1.0, 50000, 9);
        double s = 0.0, s2 = 0.0;
        for (double v : x) {
            s += std::exp(v);
            s2 += std::exp(2.0 * v);
        }
        const double n = static_cast<double>(x.size());
        const double mean = s / n;
        const double se = std::sqrt((s2 / n - mean * mean) / n);
        EXPECT_LT(std::abs(mean - 1.0), 4.5 * se) << name;
    }
}

TEST(Simulation, KsDistance) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n(0.0, 0.5);
    std::vector<double> x(20000);
    for (auto& v : x) v = n(rng);
    EXPECT_LT(ks_distance_normal(x, 0.5), 0.015);
    EXPECT_GT(ks_distance_normal(x, 1.0), 0.1);
}

TEST(Simulation, TruncationShrinksWithTime) {
    const Truncation a = choose_truncation(cgmy_bm(), 0.1);
    const Truncation b = choose_truncation(cgmy_bm(), 0.001);
    EXPECT_GT(a.epsilon, 0.0);
    EXPECT_LE(b.epsilon, a.epsilon);
    EXPECT_GT(a.small_variance, 0.0);
}

TEST(Simulation, CltDiagnosticDecreasesForKou) {
    const std::vector<double> times{1e-1, 1e-2, 1e-3};
    const CltDiagnostic d = small_time_clt_diagnostic(kou_bm(), times, 20000, 5, 100);
    ASSERT_EQ(d.rows.size(), 3u);
    EXPECT_GT(d.rows[0].ks, d.rows[2].ks);
    EXPECT_TRUE(d.strictly_decreasing);
}
