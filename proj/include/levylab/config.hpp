#pragma once

#include "levylab/american_pide.hpp"
#include "levylab/levy_model.hpp"
#include "levylab/stopping_value.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace levylab {

struct OptionConfig {
    double strike = 100.0;
    double spot = 100.0;
    double maturity = 1.0;
};

/// Grid policy. Full-maturity solves use n_x nodes over ln K -/+ width; the
/// near-maturity rate solves size themselves from sigma sqrt(theta).
struct GridConfig {
    int n_x = 2001;
    int n_t = 400;
    double width = 2.0;            // half-width of the default log domain
    std::optional<double> x_min;   // overrides for the default domain
    std::optional<double> x_max;
    int near_n_t = 200;
    double points_per_scale = 40.0;
    LcpMethod lcp = LcpMethod::BrennanSchwartz;
    TimeScheme scheme = TimeScheme::Bdf2;
};

struct ExperimentConfig {
    double theta_max = 1e-1;
    double theta_min = 1e-4;
    int n_theta = 16;
    std::optional<double> tolerance;        // band half-width; regime default otherwise
    std::optional<std::string> expect_rate;  // e.g. "Thm5.4"; mismatch is an error
    std::optional<double> y_star;            // skips the stopping solve
    PhaseOneGrowth growth = PhaseOneGrowth::Growing;
    double stopping_dx = 2e-3;
    std::vector<double> expansion_thetas{0.016, 0.008, 0.004, 0.002};
    std::vector<double> expansion_multiples{0.25, 0.5, 2.0};  // a = -m sigma y*
    int mc_paths = 100000;
};

struct Config {
    LevyModel model;
    OptionConfig option;
    GridConfig grid;
    ExperimentConfig experiment;
};

/// INI text with [model] [option] [grid] [experiment]. Unknown keys and
/// malformed numbers raise InvalidInput.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

/// Full-maturity grid from the policy (domain ln K -/+ width unless overridden).
Grid full_grid(const GridConfig& g, double strike, double maturity);

/// "z:w, z:w" lists used for atoms and discrete jump laws.
std::vector<Atom> parse_atoms(const std::string& text);

}  // namespace levylab
