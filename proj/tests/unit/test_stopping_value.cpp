#include "levylab/stopping_value.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace levylab;

TEST(Stopping, PdeThreshold) {
    const StoppingValue v = v_zero();
    EXPECT_NEAR(v.y_star, 0.6387, 2e-3);
    EXPECT_LT(v.residual, 1e-8);
    for (std::size_t i = 1; i < v.v.size(); ++i) EXPECT_GE(v.v[i], v.v[i - 1] - 1e-12);
    EXPECT_DOUBLE_EQ(v.at(-10.0), 0.0);
}

TEST(Stopping, LatticeAgreesWithPde) {
    StoppingGrid g;
    g.dx = 4e-3;
    const StoppingValue pde = v_zero(g);
    const StoppingValue lat = v_lambda_beta(StoppingProblem{0.0, 0.0, PhaseOneGrowth::Growing, g});
    EXPECT_NEAR(lat.y_star, pde.y_star, 0.01 * pde.y_star);
    EXPECT_NEAR(lat.at(0.0), pde.at(0.0), 0.01 * pde.at(2.0));
}

TEST(Stopping, JumpsRaiseThreshold) {
    StoppingGrid g;
    g.dx = 4e-3;
    const double y0 = y_star(StoppingProblem{0.0, 0.0, PhaseOneGrowth::Growing, g});
    const double y1 = y_star(StoppingProblem{0.5, 1.0, PhaseOneGrowth::Growing, g});
    EXPECT_NE(y0, y1);
}

TEST(Stopping, LocalTime) {
    EXPECT_NEAR(lattice_local_time_mean(2e-3), std::sqrt(2.0 / M_PI), 0.01 * std::sqrt(2.0 / M_PI));
}
