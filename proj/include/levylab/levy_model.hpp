#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace levylab {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Point mass of the Levy measure: jump of log-size `location` arriving at rate `weight`.
struct Atom {
    double location;
    double weight;
};

namespace jumps {

struct None {};

/// Compound Poisson with a discrete jump-size law. `sizes[i].weight` are
/// probabilities (summing to one); the measure is intensity * law.
struct FiniteActivity {
    double intensity = 0.0;
    std::vector<Atom> sizes;
};

/// Double-exponential jumps: lambda_up*eta_up*e^{-eta_up z} on z>0 and
/// lambda_down*eta_down*e^{eta_down z} on z<0.
struct Kou {
    double lambda_up = 0.0;
    double eta_up = 0.0;
    double lambda_down = 0.0;
    double eta_down = 0.0;
};

/// Gaussian jump sizes N(mean, stdev^2) at rate `intensity`.
struct Merton {
    double intensity = 0.0;
    double mean = 0.0;
    double stdev = 0.0;
};

/// C e^{-M z}/z on z>0, C e^{-G|z|}/|z| on z<0.
struct VarianceGamma {
    double c = 0.0;
    double g = 0.0;
    double m = 0.0;
};

/// c_pos e^{-M z} z^{-1-alpha_pos} on z>0, c_neg e^{-G|z|} |z|^{-1-alpha_neg} on z<0.
/// Each alpha lies in (0,2) and differs from 1. CGMY is the symmetric-alpha case.
struct TemperedStable {
    double c_pos = 0.0;
    double c_neg = 0.0;
    double g = 0.0;
    double m = 0.0;
    double alpha_pos = 0.5;
    double alpha_neg = 0.5;
};

}  // namespace jumps

using JumpLaw = std::variant<jumps::None, jumps::FiniteActivity, jumps::Kou, jumps::Merton,
                             jumps::VarianceGamma, jumps::TemperedStable>;

struct LevyMeasureSpec {
    JumpLaw law = jumps::None{};
    std::vector<Atom> atoms;
};

/// Open-or-closed interval of jump sizes; the origin is always excluded.
struct Interval {
    double lo = -kInf;
    double hi = kInf;
};

/// Exponential Levy market: S_t = S_0 exp((r - delta) t + X_t) with the Levy
/// drift fixed by the martingale condition E[e^{X_t}] = 1.
class LevyModel {
public:
    LevyModel(double r, double delta, double sigma, LevyMeasureSpec measure = {});

    double r() const { return r_; }
    double delta() const { return delta_; }
    double sigma() const { return sigma_; }
    const LevyMeasureSpec& measure() const { return measure_; }

    /// Drift b of the Levy triplet (truncation function 1{|z|<=1}).
    double drift() const;

    /// Density of the absolutely continuous part of nu (zero at the origin).
    double density(double z) const;

    /// Every point mass: FiniteActivity sizes (scaled by intensity) and extra atoms.
    std::vector<Atom> point_masses() const;

    bool has_jumps() const;
    bool has_density() const;

    /// Exponential decay rates of the density tails: nu has e^{-rate |z|}
    /// tails, +inf when the side has no density or super-exponential decay.
    double positive_tail_rate() const;
    double negative_tail_rate() const;

    /// Blumenthal-Getoor-style index of the small-jump singularity per side:
    /// -1 for a bounded density, 0 for VG, alpha for tempered stable.
    double positive_singularity() const;
    double negative_singularity() const;

    bool finite_activity() const;
    bool finite_variation() const;
    bool positive_finite_variation() const;

    /// Compensated exponent kappa(u) = int (e^{iuz} - 1 - iuz) nu(dz), closed form per law.
    cplx compensated_exponent(cplx u) const;

    /// Short human label such as "kou" or "bs".
    std::string kind() const;

private:
    double r_;
    double delta_;
    double sigma_;
    LevyMeasureSpec measure_;
};

/// psi(u) with E[e^{iuX_t}] = e^{t psi(u)}; psi(-i) = 0 and psi(0) = 0.
cplx characteristic_exponent(const LevyModel& model, cplx u);

/// Integrability strip for Im(u): psi(u) exists for lower < Im(u) < upper.
struct Strip {
    double lower;
    double upper;
};
Strip exponent_strip(const LevyModel& model);

/// d = r - delta - int_{0+}^inf (e^z - 1) nu(dz), closed form where available.
double compute_d(const LevyModel& model);

/// Same quantity routed through integrate_nu (the quadrature cross-check path).
double compute_d_quadrature(const LevyModel& model);

/// int f d nu over `domain` minus the origin. `vanish_order` declares how fast f
/// vanishes at zero (|f(z)| <= c|z|^order); infinite-activity sides require an
/// order larger than their singularity index.
double integrate_nu(const LevyModel& model, const std::function<double(double)>& f,
                    Interval domain = {}, int vanish_order = 0);

/// nu(z > c) and int_{z>c} e^z nu(dz) for c > 0 (closed form for Kou, quadrature otherwise).
double tail_mass_above(const LevyModel& model, double c);
double tail_exp_moment_above(const LevyModel& model, double c);

/// Linear-rate coefficient int (e^z - 1)^- nu(dz), closed form per law.
double negative_part_integral(const LevyModel& model);

enum class Activity { Finite, Infinite };
enum class Variation { Finite, Infinite };
enum class BoundaryLimit { Strike, Xi };

/// Near-maturity rate law selected by classify_regime. The string forms
/// ("Thm3.5/4.1", ...) are the tags written to reports and printed by the CLI.
enum class RateTag {
    FiniteActivityPositiveD,  // sigma K sqrt(theta |ln theta|)
    FiniteActivityZeroD,      // sqrt(2) sigma K sqrt(theta |ln theta|)
    FiniteActivityNegativeD,  // y sigma xi sqrt(theta), atoms allowed
    PureJumpLinear,           // K/b - 1 ~ theta int (e^z-1)^- nu(dz)
    DiffusiveLogRate,         // sigma K sqrt(-theta ln theta) + O(sqrt theta)
    TemperedStablePureJump,   // theta^{1/alpha} |ln theta|^{1-1/alpha}
    NegativeDParabolic,       // y sigma xi sqrt(theta), finite variation jumps
    None,
};

std::string to_string(RateTag tag);
RateTag rate_tag_from_string(const std::string& s);

struct RegimeReport {
    double d = 0.0;
    Activity activity = Activity::Finite;
    Variation variation = Variation::Finite;
    bool brownian = false;
    BoundaryLimit boundary_limit = BoundaryLimit::Strike;
    double limit_value = 0.0;  // K or xi
    RateTag applicable_rate = RateTag::None;

    bool operator==(const RegimeReport&) const = default;
};

/// Pure classification: sign of d, activity/variation flags, boundary limit and
/// the most specific rate law whose hypotheses hold.
RegimeReport classify_regime(const LevyModel& model, double strike);

/// One-line summary such as "d>0, limit=K, rate=Thm3.5/4.1".
std::string describe(const RegimeReport& report);

}  // namespace levylab
