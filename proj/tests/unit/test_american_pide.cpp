#include "models.hpp"

#include "levylab/american_pide.hpp"
#include "levylab/errors.hpp"
#include "levylab/european.hpp"

#include "../oracles.hpp"

#include <gtest/gtest.h>

using namespace levylab;
using namespace testmodels;

namespace {

Grid grid(double T, int n_x = 801, int n_t = 200) {
    Grid g;
    g.x_min = std::log(100.0) - 2.0;
    g.x_max = std::log(100.0) + 2.0;
    g.n_x = n_x;
    g.T = T;
    g.n_t = n_t;
    return g;
}

}  // namespace

TEST(AmericanPide, BlackScholesAgainstBinomial) {
    const PriceSurface s = solve(bs(), 100.0, grid(1.0, 1601, 200));
    const double crr = oracle::crr_american_put(100.0, 100.0, 0.05, 0.0, 0.2, 1.0, 2000);
    EXPECT_NEAR(s.value_at(s.tau.size() - 1, 100.0), crr, 2e-2);
    EXPECT_LT(s.max_complementarity_residual, 1e-8);
}

// The infinite-variation CGMY case carries the small-jump folding error (about 0.02 here).
TEST(AmericanPide, EuropeanStyleMatchesFourier) {
    SolverOptions o;
    o.style = ExerciseStyle::European;
    for (const LevyModel& m : {bs(), kou_bm(), cgmy_bm()}) {
        const PriceSurface s = solve(m, 100.0, grid(0.5, 1601, 200), o);
        for (double spot : {85.0, 100.0, 115.0}) {
            EXPECT_NEAR(s.value_at(s.tau.size() - 1, spot),
                        price_european_put(m, 0.5, spot, 100.0).value, 4e-2)
                << m.kind() << " " << spot;
        }
    }
}

TEST(AmericanPide, ShapeAndBoundary) {
    for (const LevyModel& m : {kou_bm(), kou_neg(), merton_bm()}) {
        PriceSurface s = solve(m, 100.0, grid(0.25));
        EXPECT_EQ(diagnose_surface(s).total(), 0) << m.kind();
        EXPECT_NO_THROW(premium(s, m));
        const BoundaryCurve c = extract_boundary(s);
        ASSERT_EQ(c.b.size(), s.tau.size());
        for (std::size_t j = 1; j < c.b.size(); ++j) {
            EXPECT_GT(c.b[j], 0.0);
            EXPECT_LE(c.b[j], 100.0 + 1e-12);
        }
    }
}

TEST(AmericanPide, ValueAtReproducesNodes) {
    const PriceSurface s = solve(bs(), 100.0, grid(0.25, 401, 100));
    const std::size_t j = s.tau.size() - 1;
    for (std::size_t i : {50u, 200u, 350u}) {
        EXPECT_NEAR(s.value_at(j, std::exp(s.x[i])), s.values[j][i], 1e-10);
    }
}

TEST(AmericanPide, CheckpointsAreGridTimes) {
    Grid g = grid(0.5);
    g.checkpoints = {1e-4, 1e-2};
    const PriceSurface s = solve(bs(), 100.0, g);
    EXPECT_NEAR(s.tau[s.slice_near(1e-4)], 1e-4, 1e-15);
    EXPECT_NEAR(s.tau[s.slice_near(1e-2)], 1e-2, 1e-15);
}

TEST(AmericanPide, PsorAndEulerOptions) {
    SolverOptions o;
    o.lcp = LcpMethod::Psor;
    o.scheme = TimeScheme::ImplicitEuler;
    const PriceSurface a = solve(bs(), 100.0, grid(0.25, 401, 100), o);
    const PriceSurface b = solve(bs(), 100.0, grid(0.25, 401, 100));
    EXPECT_NEAR(a.value_at(a.tau.size() - 1, 100.0), b.value_at(b.tau.size() - 1, 100.0), 2e-2);
}

TEST(AmericanPide, RejectsBadGrid) {
    Grid g = grid(0.25);
    g.n_x = 2;
    EXPECT_THROW(solve(bs(), 100.0, g), Error);
}

TEST(AmericanPide, StrikeBetweenNodes) {
    // ln K off the grid: the kink must not leak into value_at
    Grid g = grid(1.0, 2001, 400);
    g.x_min = std::log(100.0) - 2.5;
    const PriceSurface s = solve(bs(), 100.0, g);
    const double crr = oracle::crr_american_put(100.0, 100.0, 0.05, 0.0, 0.2, 1.0, 2000);
    EXPECT_NEAR(s.value_at(s.tau.size() - 1, 100.0), crr, 2e-3);
}
