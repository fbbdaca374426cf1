#include "levylab/levy_model.hpp"

#include "levylab/asymptotics.hpp"
#include "levylab/errors.hpp"
#include "quadrature.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace levylab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidModel(msg);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

void validate_alpha(double alpha, const char* side) {
    require(alpha > 0.0 && alpha < 2.0, fmt::format("tempered stable alpha_{} must lie in (0,2)", side));
    require(std::abs(alpha - 1.0) > 1e-12,
            fmt::format("tempered stable alpha_{} = 1 is not supported", side));
}

// int_0^inf (e^{-a z} - e^{-b z} ...) style closed forms for one tempered-stable side.
cplx ts_side(double c, double decay, double alpha, cplx w) {
    // C Gamma(-alpha) [(decay - w)^alpha - decay^alpha + w alpha decay^{alpha-1}],
    // i.e. int_0^inf (e^{wz} - 1 - wz) C e^{-decay z} z^{-1-alpha} dz.
    if (c == 0.0) return 0.0;
    const double g = boost::math::tgamma(-alpha);
    return c * g *
           (std::pow(cplx(decay) - w, alpha) - std::pow(decay, alpha) +
            w * alpha * std::pow(decay, alpha - 1.0));
}

}  // namespace

LevyModel::LevyModel(double r, double delta, double sigma, LevyMeasureSpec measure)
    : r_(r), delta_(delta), sigma_(sigma), measure_(std::move(measure)) {
    require(finite_nonneg(r_), "interest rate must be finite and >= 0");
    require(finite_nonneg(delta_), "dividend yield must be finite and >= 0");
    require(finite_nonneg(sigma_), "volatility must be finite and >= 0");

    std::visit(
        overloaded{
            [](const jumps::None&) {},
            [](const jumps::FiniteActivity& fa) {
                require(finite_nonneg(fa.intensity), "finite-activity intensity must be >= 0");
                double total = 0.0;
                for (const auto& a : fa.sizes) {
                    require(std::isfinite(a.location) && a.location != 0.0,
                            "jump sizes must be finite and nonzero");
                    require(a.weight > 0.0, "jump-size probabilities must be > 0");
                    total += a.weight;
                }
                require(fa.sizes.empty() || std::abs(total - 1.0) < 1e-12,
                        "jump-size probabilities must sum to one");
            },
            [](const jumps::Kou& k) {
                require(finite_nonneg(k.lambda_up) && finite_nonneg(k.lambda_down),
                        "Kou intensities must be >= 0");
                require(k.lambda_up == 0.0 || k.eta_up > 1.0,
                        "Kou eta_up must exceed 1 (exponential moment of positive jumps)");
                require(k.lambda_down == 0.0 || k.eta_down > 0.0, "Kou eta_down must be > 0");
            },
            [](const jumps::Merton& m) {
                require(finite_nonneg(m.intensity), "Merton intensity must be >= 0");
                require(m.intensity == 0.0 || m.stdev > 0.0, "Merton jump stdev must be > 0");
                require(std::isfinite(m.mean), "Merton jump mean must be finite");
            },
            [](const jumps::VarianceGamma& vg) {
                require(finite_nonneg(vg.c), "VG C must be >= 0");
                require(vg.c == 0.0 || (vg.g > 0.0 && vg.m > 1.0),
                        "VG requires G > 0 and M > 1 (exponential moment)");
            },
            [](const jumps::TemperedStable& ts) {
                require(finite_nonneg(ts.c_pos) && finite_nonneg(ts.c_neg),
                        "tempered stable C+/C- must be >= 0");
                if (ts.c_pos > 0.0) {
                    require(ts.m > 1.0, "tempered stable M must exceed 1 (exponential moment)");
                    validate_alpha(ts.alpha_pos, "pos");
                }
                if (ts.c_neg > 0.0) {
                    require(ts.g > 0.0, "tempered stable G must be > 0");
                    validate_alpha(ts.alpha_neg, "neg");
                }
            },
        },
        measure_.law);

    for (const auto& a : measure_.atoms) {
        require(std::isfinite(a.location) && a.location != 0.0, "atom locations must be nonzero");
        require(a.weight > 0.0 && std::isfinite(a.weight), "atom weights must be > 0");
    }

    // Neither a.s. increasing nor a.s. decreasing paths.
    bool neg_density = false;
    bool pos_density = false;
    std::visit(overloaded{
                   [&](const jumps::Merton& m) { neg_density = pos_density = m.intensity > 0.0; },
                   [&](const jumps::Kou& k) {
                       pos_density = k.lambda_up > 0.0;
                       neg_density = k.lambda_down > 0.0;
                   },
                   [&](const jumps::VarianceGamma& vg) { neg_density = pos_density = vg.c > 0.0; },
                   [&](const jumps::TemperedStable& ts) {
                       pos_density = ts.c_pos > 0.0;
                       neg_density = ts.c_neg > 0.0;
                   },
                   [](const auto&) {},
               },
               measure_.law);
    const auto pm = point_masses();
    const bool neg_any = neg_density || std::any_of(pm.begin(), pm.end(), [](const Atom& a) {
                             return a.location < 0.0;
                         });
    const bool pos_any = pos_density || std::any_of(pm.begin(), pm.end(), [](const Atom& a) {
                             return a.location > 0.0;
                         });
    require(sigma_ > 0.0 || neg_any, "no-arbitrage: need sigma > 0 or negative jumps");
    require(sigma_ > 0.0 || pos_any, "no-arbitrage: need sigma > 0 or positive jumps");
}

double LevyModel::density(double z) const {
    if (z == 0.0) return 0.0;
    return std::visit(
        overloaded{
            [](const jumps::None&) { return 0.0; },
            [](const jumps::FiniteActivity&) { return 0.0; },
            [z](const jumps::Kou& k) {
                if (z > 0.0) return k.lambda_up * k.eta_up * std::exp(-k.eta_up * z);
                return k.lambda_down * k.eta_down * std::exp(k.eta_down * z);
            },
            [z](const jumps::Merton& m) {
                if (m.intensity == 0.0) return 0.0;
                const double u = (z - m.mean) / m.stdev;
                return m.intensity * std::exp(-0.5 * u * u) / (m.stdev * std::sqrt(2.0 * M_PI));
            },
            [z](const jumps::VarianceGamma& vg) {
                if (z > 0.0) return vg.c * std::exp(-vg.m * z) / z;
                return vg.c * std::exp(vg.g * z) / (-z);
            },
            [z](const jumps::TemperedStable& ts) {
                if (z > 0.0) {
                    if (ts.c_pos == 0.0) return 0.0;
                    return ts.c_pos * std::exp(-ts.m * z) * std::pow(z, -1.0 - ts.alpha_pos);
                }
                if (ts.c_neg == 0.0) return 0.0;
                return ts.c_neg * std::exp(ts.g * z) * std::pow(-z, -1.0 - ts.alpha_neg);
            },
        },
        measure_.law);
}

std::vector<Atom> LevyModel::point_masses() const {
    std::vector<Atom> out = measure_.atoms;
    if (const auto* fa = std::get_if<jumps::FiniteActivity>(&measure_.law)) {
        for (const auto& a : fa->sizes) {
            if (fa->intensity > 0.0) out.push_back({a.location, fa->intensity * a.weight});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    return out;
}

bool LevyModel::has_density() const {
    return std::visit(overloaded{
                          [](const jumps::None&) { return false; },
                          [](const jumps::FiniteActivity&) { return false; },
                          [](const jumps::Kou& k) { return k.lambda_up + k.lambda_down > 0.0; },
                          [](const jumps::Merton& m) { return m.intensity > 0.0; },
                          [](const jumps::VarianceGamma& vg) { return vg.c > 0.0; },
                          [](const jumps::TemperedStable& ts) { return ts.c_pos + ts.c_neg > 0.0; },
                      },
                      measure_.law);
}

bool LevyModel::has_jumps() const { return has_density() || !point_masses().empty(); }

double LevyModel::positive_tail_rate() const {
    return std::visit(overloaded{
                          [](const jumps::Kou& k) { return k.lambda_up > 0.0 ? k.eta_up : kInf; },
                          [](const jumps::VarianceGamma& vg) { return vg.c > 0.0 ? vg.m : kInf; },
                          [](const jumps::TemperedStable& ts) {
                              return ts.c_pos > 0.0 ? ts.m : kInf;
                          },
                          [](const auto&) { return kInf; },
                      },
                      measure_.law);
}

double LevyModel::negative_tail_rate() const {
    return std::visit(overloaded{
                          [](const jumps::Kou& k) {
                              return k.lambda_down > 0.0 ? k.eta_down : kInf;
                          },
                          [](const jumps::VarianceGamma& vg) { return vg.c > 0.0 ? vg.g : kInf; },
                          [](const jumps::TemperedStable& ts) {
                              return ts.c_neg > 0.0 ? ts.g : kInf;
                          },
                          [](const auto&) { return kInf; },
                      },
                      measure_.law);
}

double LevyModel::positive_singularity() const {
    return std::visit(overloaded{
                          [](const jumps::VarianceGamma& vg) { return vg.c > 0.0 ? 0.0 : -1.0; },
                          [](const jumps::TemperedStable& ts) {
                              return ts.c_pos > 0.0 ? ts.alpha_pos : -1.0;
                          },
                          [](const auto&) { return -1.0; },
                      },
                      measure_.law);
}

double LevyModel::negative_singularity() const {
    return std::visit(overloaded{
                          [](const jumps::VarianceGamma& vg) { return vg.c > 0.0 ? 0.0 : -1.0; },
                          [](const jumps::TemperedStable& ts) {
                              return ts.c_neg > 0.0 ? ts.alpha_neg : -1.0;
                          },
                          [](const auto&) { return -1.0; },
                      },
                      measure_.law);
}

bool LevyModel::finite_activity() const {
    return positive_singularity() < 0.0 && negative_singularity() < 0.0;
}

bool LevyModel::finite_variation() const {
    return positive_singularity() < 1.0 && negative_singularity() < 1.0;
}

bool LevyModel::positive_finite_variation() const { return positive_singularity() < 1.0; }

cplx LevyModel::compensated_exponent(cplx u) const {
    const cplx iu = cplx(0.0, 1.0) * u;
    cplx k = std::visit(
        overloaded{
            [](const jumps::None&) { return cplx(0.0); },
            [](const jumps::FiniteActivity&) { return cplx(0.0); },  // via point_masses()
            [&](const jumps::Kou& kou) {
                cplx s = 0.0;
                if (kou.lambda_up > 0.0) {
                    s += kou.lambda_up * (kou.eta_up / (kou.eta_up - iu) - 1.0) -
                         iu * kou.lambda_up / kou.eta_up;
                }
                if (kou.lambda_down > 0.0) {
                    s += kou.lambda_down * (kou.eta_down / (kou.eta_down + iu) - 1.0) +
                         iu * kou.lambda_down / kou.eta_down;
                }
                return s;
            },
            [&](const jumps::Merton& m) {
                if (m.intensity == 0.0) return cplx(0.0);
                return m.intensity *
                       (std::exp(iu * m.mean + 0.5 * m.stdev * m.stdev * iu * iu) - 1.0 -
                        iu * m.mean);
            },
            [&](const jumps::VarianceGamma& vg) {
                if (vg.c == 0.0) return cplx(0.0);
                return -vg.c * std::log(1.0 - iu / vg.m) - vg.c * std::log(1.0 + iu / vg.g) -
                       iu * vg.c * (1.0 / vg.m - 1.0 / vg.g);
            },
            [&](const jumps::TemperedStable& ts) {
                return ts_side(ts.c_pos, ts.m, ts.alpha_pos, iu) +
                       ts_side(ts.c_neg, ts.g, ts.alpha_neg, -iu);
            },
        },
        measure_.law);
    for (const auto& a : point_masses()) {
        k += a.weight * (std::exp(iu * a.location) - 1.0 - iu * a.location);
    }
    return k;
}

double LevyModel::drift() const {
    // b = -sigma^2/2 - int (e^z - 1 - z 1{|z|<=1}) nu(dz)
    const double kc = compensated_exponent(cplx(0.0, -1.0)).real();
    const double big = integrate_nu(*this, [](double z) { return z; }, {-kInf, -1.0}) +
                       integrate_nu(*this, [](double z) { return z; }, {1.0, kInf});
    return -0.5 * sigma_ * sigma_ - kc - big;
}

std::string LevyModel::kind() const {
    std::string base = std::visit(overloaded{
                                      [](const jumps::None&) { return std::string("bs"); },
                                      [](const jumps::FiniteActivity&) {
                                          return std::string("finite");
                                      },
                                      [](const jumps::Kou&) { return std::string("kou"); },
                                      [](const jumps::Merton&) { return std::string("merton"); },
                                      [](const jumps::VarianceGamma&) { return std::string("vg"); },
                                      [](const jumps::TemperedStable&) {
                                          return std::string("tempered_stable");
                                      },
                                  },
                                  measure_.law);
    if (!measure_.atoms.empty()) base += "+atoms";
    return base;
}

Strip exponent_strip(const LevyModel& model) {
    return {-model.positive_tail_rate(), model.negative_tail_rate()};
}

cplx characteristic_exponent(const LevyModel& model, cplx u) {
    const Strip strip = exponent_strip(model);
    if (!(u.imag() > strip.lower && u.imag() < strip.upper)) {
        throw StripViolation(fmt::format("Im(u) = {} outside integrability strip ({}, {})",
                                         u.imag(), strip.lower, strip.upper));
    }
    const cplx i(0.0, 1.0);
    const double s2 = model.sigma() * model.sigma();
    const cplx mart = model.compensated_exponent(cplx(0.0, -1.0));
    return -0.5 * s2 * (u * u + i * u) + model.compensated_exponent(u) - i * u * mart;
}

namespace {

// Absolutely continuous part of int f dnu over (lo, hi).
double density_integral(const LevyModel& model, const std::function<double(double)>& f,
                        Interval domain, int vanish_order) {
    const double lo = domain.lo;
    const double hi = domain.hi;
    double total = 0.0;
    if (!(hi > lo) || !model.has_density()) return total;

    auto g = [&](double z) {
        const double d = model.density(z);
        return d == 0.0 ? 0.0 : f(z) * d;
    };

    // One side of the origin: integrate over (a, b) with 0 <= a < b in |z|.
    auto side = [&](double sign, double a, double b, double singularity) {
        if (!(b > a)) return 0.0;
        auto gs = [&](double w) { return g(sign * w); };
        double acc = 0.0;
        if (a == 0.0) {
            if (singularity >= 0.0 && vanish_order <= singularity) {
                throw NonIntegrable(fmt::format(
                    "integrand vanishing to order {} is not nu-integrable near 0 (index {})",
                    vanish_order, singularity));
            }
            const double c = std::min(1.0, b);
            acc += detail::near_zero(gs, c);
            if (b > c) acc += detail::gk(gs, c, b);
        } else if (singularity >= 0.0 && a < 1e-3) {
            // log substitution w = a e^t spreads the singular scale over (a, c)
            const double c = std::min(1.0, b);
            auto gl = [&](double t) {
                const double w = a * std::exp(t);
                return gs(w) * w;
            };
            acc += detail::gk(gl, 0.0, std::log(c / a));
            if (b > c) acc += detail::gk(gs, c, b);
        } else {
            acc += detail::gk(gs, a, b);
        }
        return acc;
    };

    if (hi > 0.0) {
        const double a = std::max(lo, 0.0);
        total += side(1.0, a, hi, model.positive_singularity());
    }
    if (lo < 0.0) {
        const double a = std::max(-hi, 0.0);
        total += side(-1.0, a, -lo, model.negative_singularity());
    }
    if (!std::isfinite(total)) throw NonIntegrable("nu-integral diverged");
    return total;
}

}  // namespace

double integrate_nu(const LevyModel& model, const std::function<double(double)>& f,
                    Interval domain, int vanish_order) {
    double total = 0.0;
    for (const auto& a : model.point_masses()) {
        if (a.location >= domain.lo && a.location <= domain.hi && a.location != 0.0) {
            total += a.weight * f(a.location);
        }
    }
    return total + density_integral(model, f, domain, vanish_order);
}

namespace {

// int_{0+}^inf (e^z - 1) nu(dz) from the density part, closed form.
double positive_exp_integral(const LevyModel& model) {
    return std::visit(
        overloaded{
            [](const jumps::None&) { return 0.0; },
            [](const jumps::FiniteActivity&) { return 0.0; },
            [](const jumps::Kou& k) {
                return k.lambda_up > 0.0 ? k.lambda_up / (k.eta_up - 1.0) : 0.0;
            },
            [](const jumps::Merton& m) {
                if (m.intensity == 0.0) return 0.0;
                const double s = m.stdev;
                return m.intensity * (std::exp(m.mean + 0.5 * s * s) * norm_cdf((m.mean + s * s) / s) -
                                      norm_cdf(m.mean / s));
            },
            [](const jumps::VarianceGamma& vg) {
                return vg.c > 0.0 ? vg.c * std::log(vg.m / (vg.m - 1.0)) : 0.0;
            },
            [](const jumps::TemperedStable& ts) {
                if (ts.c_pos == 0.0) return 0.0;
                if (ts.alpha_pos > 1.0) {
                    throw DivergentPositiveJumps(
                        "positive jumps have infinite variation: int (e^z-1) nu(dz) diverges");
                }
                return ts.c_pos * boost::math::tgamma(-ts.alpha_pos) *
                       (std::pow(ts.m - 1.0, ts.alpha_pos) - std::pow(ts.m, ts.alpha_pos));
            },
        },
        model.measure().law);
}

}  // namespace

double compute_d(const LevyModel& model) {
    double pos = positive_exp_integral(model);
    for (const auto& a : model.point_masses()) {
        if (a.location > 0.0) pos += a.weight * std::expm1(a.location);
    }
    return model.r() - model.delta() - pos;
}

double compute_d_quadrature(const LevyModel& model) {
    try {
        const double pos =
            integrate_nu(model, [](double z) { return std::expm1(z); }, {0.0, kInf}, 1);
        return model.r() - model.delta() - pos;
    } catch (const NonIntegrable& e) {
        throw DivergentPositiveJumps(e.what());
    }
}

double tail_mass_above(const LevyModel& model, double c) {
    double atoms = 0.0;
    for (const auto& a : model.point_masses()) {
        if (a.location > c) atoms += a.weight;
    }
    if (const auto* k = std::get_if<jumps::Kou>(&model.measure().law)) {
        return atoms + k->lambda_up * std::exp(-k->eta_up * c);
    }
    if (const auto* m = std::get_if<jumps::Merton>(&model.measure().law)) {
        if (m->intensity == 0.0) return atoms;
        return atoms + m->intensity * norm_cdf(-(c - m->mean) / m->stdev);
    }
    return atoms + density_integral(model, [](double) { return 1.0; }, {c, kInf}, 0);
}

double tail_exp_moment_above(const LevyModel& model, double c) {
    double atoms = 0.0;
    for (const auto& a : model.point_masses()) {
        if (a.location > c) atoms += a.weight * std::exp(a.location);
    }
    if (const auto* k = std::get_if<jumps::Kou>(&model.measure().law)) {
        if (k->lambda_up == 0.0) return atoms;
        return atoms +
               k->lambda_up * k->eta_up * std::exp((1.0 - k->eta_up) * c) / (k->eta_up - 1.0);
    }
    if (const auto* m = std::get_if<jumps::Merton>(&model.measure().law)) {
        if (m->intensity == 0.0) return atoms;
        const double s = m->stdev;
        return atoms + m->intensity * std::exp(m->mean + 0.5 * s * s) *
                           norm_cdf(-(c - m->mean - s * s) / s);
    }
    return atoms +
           density_integral(model, [](double z) { return std::exp(z); }, {c, kInf}, 0);
}

double negative_part_integral(const LevyModel& model) {
    double s = std::visit(
        overloaded{
            [](const jumps::None&) { return 0.0; },
            [](const jumps::FiniteActivity&) { return 0.0; },
            [](const jumps::Kou& k) {
                return k.lambda_down > 0.0 ? k.lambda_down / (k.eta_down + 1.0) : 0.0;
            },
            [](const jumps::Merton& m) {
                if (m.intensity == 0.0) return 0.0;
                const double s = m.stdev;
                return m.intensity * (norm_cdf(-m.mean / s) -
                                      std::exp(m.mean + 0.5 * s * s) * norm_cdf(-(m.mean + s * s) / s));
            },
            [](const jumps::VarianceGamma& vg) {
                return vg.c > 0.0 ? vg.c * std::log((vg.g + 1.0) / vg.g) : 0.0;
            },
            [](const jumps::TemperedStable& ts) {
                if (ts.c_neg == 0.0) return 0.0;
                if (ts.alpha_neg > 1.0) return kInf;
                return ts.c_neg * boost::math::tgamma(-ts.alpha_neg) *
                       (std::pow(ts.g, ts.alpha_neg) - std::pow(ts.g + 1.0, ts.alpha_neg));
            },
        },
        model.measure().law);
    for (const auto& a : model.point_masses()) {
        if (a.location < 0.0) s += a.weight * (-std::expm1(a.location));
    }
    return s;
}

std::string to_string(RateTag tag) {
    switch (tag) {
        case RateTag::FiniteActivityPositiveD: return "Thm3.1a";
        case RateTag::FiniteActivityZeroD: return "Thm3.1b";
        case RateTag::FiniteActivityNegativeD: return "Thm3.1c";
        case RateTag::PureJumpLinear: return "Thm3.4";
        case RateTag::DiffusiveLogRate: return "Thm3.5/4.1";
        case RateTag::TemperedStablePureJump: return "Thm3.7";
        case RateTag::NegativeDParabolic: return "Thm5.4";
        case RateTag::None: return "none";
    }
    return "none";
}

RateTag rate_tag_from_string(const std::string& s) {
    for (auto t : {RateTag::FiniteActivityPositiveD, RateTag::FiniteActivityZeroD,
                   RateTag::FiniteActivityNegativeD, RateTag::PureJumpLinear,
                   RateTag::DiffusiveLogRate, RateTag::TemperedStablePureJump,
                   RateTag::NegativeDParabolic, RateTag::None}) {
        if (to_string(t) == s) return t;
    }
    throw InvalidInput("unknown rate tag '" + s + "'");
}

RegimeReport classify_regime(const LevyModel& model, double strike) {
    if (!(strike > 0.0)) throw InvalidInput("strike must be > 0");
    constexpr double kZeroD = 1e-12;

    RegimeReport rep;
    try {
        rep.d = compute_d(model);
    } catch (const DivergentPositiveJumps&) {
        rep.d = -kInf;
    }
    rep.activity = model.finite_activity() ? Activity::Finite : Activity::Infinite;
    rep.variation = model.finite_variation() ? Variation::Finite : Variation::Infinite;
    rep.brownian = model.sigma() > 0.0;

    if (rep.d >= -kZeroD) {
        rep.boundary_limit = BoundaryLimit::Strike;
        rep.limit_value = strike;
    } else {
        rep.boundary_limit = BoundaryLimit::Xi;
        try {
            rep.limit_value = xi_limit(model, strike);
        } catch (const BracketFailure&) {
            rep.limit_value = 0.0;  // r = 0: the boundary collapses
        }
    }

    const bool d_pos = rep.d > kZeroD;
    const bool d_zero = std::abs(rep.d) <= kZeroD;
    const bool finite_act = rep.activity == Activity::Finite;
    const bool finite_var = rep.variation == Variation::Finite;

    if (rep.brownian) {
        if (d_pos) {
            rep.applicable_rate = RateTag::DiffusiveLogRate;
        } else if (d_zero) {
            rep.applicable_rate = finite_act ? RateTag::FiniteActivityZeroD : RateTag::None;
        } else if (std::isfinite(rep.d) && finite_var) {
            const bool atoms = !model.point_masses().empty();
            rep.applicable_rate = (finite_act && atoms) ? RateTag::FiniteActivityNegativeD
                                                        : RateTag::NegativeDParabolic;
        }
    } else if (d_pos) {
        if (finite_var) {
            rep.applicable_rate = RateTag::PureJumpLinear;
        } else if (model.negative_singularity() > 1.0 && model.positive_finite_variation()) {
            rep.applicable_rate = RateTag::TemperedStablePureJump;
        }
    }
    return rep;
}

std::string describe(const RegimeReport& report) {
    const char* sign = report.d > 1e-12 ? "d>0" : (report.d < -1e-12 ? "d<0" : "d=0");
    const char* limit = report.boundary_limit == BoundaryLimit::Strike ? "K" : "xi";
    return fmt::format("{}, limit={}, rate={}", sign, limit, to_string(report.applicable_rate));
}

}  // namespace levylab
