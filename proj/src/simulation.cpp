#include "levylab/simulation.hpp"

#include "levylab/errors.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace levylab {

namespace {

/// int_{|z|<eps} z^2 nu(dz) over the density part.
double small_jump_variance(const LevyModel& model, double eps) {
    if (!(eps > 0.0) || !model.has_density()) return 0.0;
    auto g = [&](double z) { return z * z * model.density(z); };
    auto gm = [&](double z) { return z * z * model.density(-z); };
    return detail::near_zero(g, eps) + detail::near_zero(gm, eps);
}

/// nu(|z| >= eps), density part only.
double big_density_rate(const LevyModel& model, double eps) {
    if (!model.has_density()) return 0.0;
    auto f = [&](double z) { return model.density(z); };
    auto fm = [&](double z) { return model.density(-z); };
    return detail::gk(f, eps, kInf) + detail::gk(fm, eps, kInf);
}

/// Inverse-CDF over geometric cells plus in-cell rejection, for a density
/// decreasing in |z| on [eps, inf).
class TableSide {
public:
    TableSide(const LevyModel& model, double sign, double eps, double tail_rate)
        : model_(model), sign_(sign) {
        const double z_end = std::max(1.0, 60.0 / tail_rate);
        double z = eps;
        edges_.push_back(z);
        cum_.push_back(0.0);
        while (z < z_end) {
            const double next = std::max(z * 1.05, z + 1e-12);
            const double m = detail::gl10([&](double w) { return model.density(sign * w); }, z, next);
            cum_.push_back(cum_.back() + m);
            edges_.push_back(next);
            z = next;
        }
    }

    double rate() const { return cum_.back(); }

    template <class Rng>
    double draw(Rng& rng) const {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const double target = u01(rng) * cum_.back();
        auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
        std::size_t k = static_cast<std::size_t>(std::distance(cum_.begin(), it));
        k = std::clamp<std::size_t>(k, 1, cum_.size() - 1) - 1;
        const double a = edges_[k];
        const double b = edges_[k + 1];
        const double top = model_.density(sign_ * a);
        for (;;) {
            const double z = a + (b - a) * u01(rng);
            if (u01(rng) * top <= model_.density(sign_ * z)) return sign_ * z;
        }
    }

private:
    const LevyModel& model_;
    double sign_;
    std::vector<double> edges_;
    std::vector<double> cum_;
};

struct Component {
    double rate = 0.0;
    std::function<double(detail::SplitMix&)> draw;
};

}  // namespace

Truncation choose_truncation(const LevyModel& model, double t) {
    Truncation tr;
    if (model.finite_activity()) {
        tr.big_jump_rate = model.has_density() ? big_density_rate(model, 0.0) : 0.0;
        return tr;
    }
    const double var_target = 1e-4 * model.sigma() * model.sigma() * t;
    double lo = 1e-6;
    double hi = 1.0;
    double eps = lo;
    if (small_jump_variance(model, lo) <= var_target) {
        // largest eps meeting the variance rule, by bisection in log space
        for (int it = 0; it < 60; ++it) {
            const double mid = std::sqrt(lo * hi);
            (small_jump_variance(model, mid) <= var_target ? lo : hi) = mid;
        }
        eps = lo;
    }
    if (t * big_density_rate(model, eps) > 200.0) {
        double a = eps;
        double b = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = std::sqrt(a * b);
            (t * big_density_rate(model, mid) > 200.0 ? a : b) = mid;
        }
        eps = b;
    }
    tr.epsilon = eps;
    tr.small_variance = small_jump_variance(model, eps);
    tr.big_jump_rate = big_density_rate(model, eps);
    return tr;
}

std::vector<double> simulate_increments(const LevyModel& model, double t, std::size_t n,
                                        std::uint64_t seed) {
    if (!(t > 0.0)) throw InvalidInput("simulation horizon must be > 0");
    const Truncation tr = choose_truncation(model, t);
    const double eps = tr.epsilon;

    std::vector<Component> comps;
    std::vector<TableSide> tables;
    tables.reserve(2);
    const auto& law = model.measure().law;
    if (const auto* k = std::get_if<jumps::Kou>(&law)) {
        if (k->lambda_up > 0.0) {
            comps.push_back({k->lambda_up, [eta = k->eta_up](detail::SplitMix& g) {
                                 return std::exponential_distribution<double>(eta)(g);
                             }});
        }
        if (k->lambda_down > 0.0) {
            comps.push_back({k->lambda_down, [eta = k->eta_down](detail::SplitMix& g) {
                                 return -std::exponential_distribution<double>(eta)(g);
                             }});
        }
    } else if (const auto* m = std::get_if<jumps::Merton>(&law)) {
        if (m->intensity > 0.0) {
            comps.push_back({m->intensity, [mu = m->mean, sd = m->stdev](detail::SplitMix& g) {
                                 return std::normal_distribution<double>(mu, sd)(g);
                             }});
        }
    } else if (model.has_density()) {
        if (model.positive_tail_rate() < kInf) {
            tables.emplace_back(model, 1.0, eps, model.positive_tail_rate());
        }
        if (model.negative_tail_rate() < kInf) {
            tables.emplace_back(model, -1.0, eps, model.negative_tail_rate());
        }
        for (const auto& tab : tables) {
            comps.push_back({tab.rate(), [&tab](detail::SplitMix& g) { return tab.draw(g); }});
        }
    }
    for (const auto& a : model.point_masses()) {
        comps.push_back({a.weight, [z = a.location](detail::SplitMix&) { return z; }});
    }

    double total_rate = 0.0;
    std::vector<double> cum;
    for (const auto& c : comps) {
        total_rate += c.rate;
        cum.push_back(total_rate);
    }

    // Compensator of the simulated jumps, so that E e^{X_t} = 1 exactly.
    double comp = 0.0;
    for (const auto& a : model.point_masses()) comp += a.weight * std::expm1(a.location);
    if (model.has_density()) {
        auto f = [&](double z) {
            const double d = model.density(z);
            return d == 0.0 ? 0.0 : std::expm1(z) * d;
        };
        auto fm = [&](double z) { return std::expm1(-z) * model.density(-z); };
        comp += detail::gk(f, eps, kInf) + detail::gk(fm, eps, kInf);
    }
    const double s2 = model.sigma() * model.sigma();
    const double drift = -0.5 * (s2 + tr.small_variance) - comp;
    const double gauss_sd = std::sqrt((s2 + tr.small_variance) * t);

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        detail::SplitMix g(detail::stream_seed(seed, i));
        double x = drift * t + gauss_sd * std::normal_distribution<double>(0.0, 1.0)(g);
        if (total_rate > 0.0) {
            const auto count = std::poisson_distribution<long>(total_rate * t)(g);
            std::uniform_real_distribution<double> u01(0.0, 1.0);
            for (long j = 0; j < count; ++j) {
                const double u = u01(g) * total_rate;
                auto it = std::upper_bound(cum.begin(), cum.end(), u);
                const std::size_t c =
                    std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), comps.size() - 1);
                x += comps[c].draw(g);
            }
        }
        out[i] = x;
    }
    return out;
}

double ks_distance_normal(std::span<double> sample, double sd) {
    if (sample.empty()) return 0.0;
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = 0.5 * std::erfc(-sample[i] / (sd * std::sqrt(2.0)));
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

CltDiagnostic small_time_clt_diagnostic(const LevyModel& model, std::span<const double> times,
                                        std::size_t n, std::uint64_t seed,
                                        int bootstrap_resamples) {
    if (!(model.sigma() > 0.0)) throw InvalidInput("CLT diagnostic requires sigma > 0");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] < times[i - 1])) throw InvalidInput("times must be strictly decreasing");
    }
    const double sd = model.sigma();
    CltDiagnostic out;
    std::vector<std::vector<double>> scaled;
    for (double t : times) {
        auto x = simulate_increments(model, t, n, seed);
        for (double& v : x) v /= std::sqrt(t);
        std::vector<double> copy = x;
        CltRow row;
        row.t = t;
        row.ks = ks_distance_normal(copy, sd);
        scaled.push_back(std::move(x));
        out.rows.push_back(row);
    }
    {
        std::vector<double> z(n);
        for (std::size_t i = 0; i < n; ++i) {
            detail::SplitMix g(detail::stream_seed(seed, i));
            z[i] = sd * std::normal_distribution<double>(0.0, 1.0)(g);
        }
        const double null_ks = ks_distance_normal(z, sd);
        for (auto& r : out.rows) r.null_ks = null_ks;
    }

    const std::size_t pairs = times.empty() ? 0 : times.size() - 1;
    std::vector<std::vector<double>> diffs(pairs);
    detail::SplitMix boot(detail::stream_seed(seed ^ 0xb0075712ULL, 0));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> idx(n);
    std::vector<double> buf(n);
    for (int b = 0; b < bootstrap_resamples; ++b) {
        for (auto& k : idx) k = pick(boot);
        std::vector<double> ks(times.size());
        for (std::size_t j = 0; j < times.size(); ++j) {
            for (std::size_t i = 0; i < n; ++i) buf[i] = scaled[j][idx[i]];
            ks[j] = ks_distance_normal(buf, sd);
        }
        for (std::size_t j = 0; j < pairs; ++j) diffs[j].push_back(ks[j] - ks[j + 1]);
    }
    out.strictly_decreasing = pairs > 0 && bootstrap_resamples > 0;
    for (auto& d : diffs) {
        std::sort(d.begin(), d.end());
        const double q = d.empty() ? 0.0 : d[static_cast<std::size_t>(0.05 * (d.size() - 1))];
        out.lower_quantiles.push_back(q);
        if (!(q > 0.0)) out.strictly_decreasing = false;
    }
    return out;
}

}  // namespace levylab
