#include "levylab/american_pide.hpp"

#include "levylab/csv.hpp"
#include "levylab/errors.hpp"
#include "levylab/lcp.hpp"
#include "quadrature.hpp"

#include <fftw3.h>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>

namespace levylab {

namespace {

// Both LCP solvers return the obstacle exactly on exercised nodes, so only round-off
// needs absorbing. Premia near a d < 0 limit are O(theta^{3/2}) and can be 1e-8 K.
constexpr double kExerciseTol = 1e-13;

std::size_t fft_size(std::size_t n) {
    for (std::size_t m = n;; ++m) {
        std::size_t r = m;
        for (std::size_t p : {2, 3, 5, 7}) {
            while (r % p == 0) r /= p;
        }
        if (r == 1) return m;
    }
}

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

/// Jump part of the generator on a uniform grid with N+1 nodes. Jumps landing
/// between nodes are split linearly between the neighbours (hat weights);
/// landings left of the grid use the deep in-the-money extension, landings
/// right of it contribute zero. |z| < dx on a singular side is folded into the
/// diffusion coefficient.
class JumpStencil {
public:
    JumpStencil(const LevyModel& model, double dx, int n) : n_(n) {
        const bool pos_sing = model.positive_singularity() >= 0.0;
        const bool neg_sing = model.negative_singularity() >= 0.0;
        std::vector<double> a(2 * n + 1, 0.0);
        std::vector<double> b(2 * n + 1, 0.0);  // cell j at index j + n

        if (model.has_density()) {
            for (int j = -n; j <= n; ++j) {
                if ((j == 0 && pos_sing) || (j == -1 && neg_sing)) continue;
                const double lo = j * dx;
                const double hi = (j + 1) * dx;
                a[j + n] = detail::gl10(
                    [&](double z) { return (1.0 - (z - lo) / dx) * model.density(z); }, lo, hi);
                b[j + n] = detail::gl10(
                    [&](double z) { return ((z - lo) / dx) * model.density(z); }, lo, hi);
            }
            if (pos_sing) {
                small_variance_ +=
                    detail::near_zero([&](double z) { return z * z * model.density(z); }, dx);
            }
            if (neg_sing) {
                small_variance_ +=
                    detail::near_zero([&](double z) { return z * z * model.density(-z); }, dx);
            }
        }

        const double z_right = (n + 1) * dx;
        const double z_left = -n * dx;
        double right_mass = 0.0;
        double right_comp = 0.0;
        for (const auto& at : model.point_masses()) {
            if (at.location >= z_left && at.location < z_right) {
                const double f = at.location / dx;
                const int j = static_cast<int>(std::floor(f));
                const double u = f - j;
                a[j + n] += at.weight * (1.0 - u);
                if (j + 1 <= n) {
                    b[j + n] += at.weight * u;
                } else {
                    right_mass += at.weight * u;  // lands beyond the stencil
                    right_comp += at.weight * u * std::expm1((j + 1) * dx);
                }
            } else if (at.location >= z_right) {
                right_mass += at.weight;
                right_comp += at.weight * std::expm1(at.location);
            } else {
                left_mass_ += at.weight;
                left_exp_ += at.weight * std::exp(at.location);
            }
        }
        if (model.has_density()) {
            auto fp = [&](double w) { return model.density(w); };
            auto fn = [&](double w) { return model.density(-w); };
            right_mass += detail::gk(fp, z_right, kInf);
            right_comp += detail::gk(
                [&](double w) {
                    const double f = fp(w);
                    return f == 0.0 ? 0.0 : std::expm1(w) * f;  // avoid inf * 0 deep in the tail
                },
                z_right, kInf);
            left_mass_ += detail::gk(fn, -z_left, kInf);
            left_exp_ += detail::gk([&](double w) { return std::exp(-w) * fn(w); }, -z_left, kInf);
        }

        w_.assign(2 * n + 2, 0.0);  // offset k in [-n, n+1] at index k + n
        for (int j = -n; j <= n; ++j) {
            w_[j + n] += a[j + n];
            w_[j + 1 + n] += b[j + n];
            intensity_ += a[j + n] + b[j + n];
            compensator_ += a[j + n] * std::expm1(j * dx) + b[j + n] * std::expm1((j + 1) * dx);
        }
        intensity_ += right_mass + left_mass_;
        compensator_ += right_comp + (left_exp_ - left_mass_);
        empty_ = intensity_ == 0.0;
        if (!empty_) plan();
    }

    JumpStencil(const JumpStencil&) = delete;
    JumpStencil& operator=(const JumpStencil&) = delete;

    ~JumpStencil() {
        if (fwd_) fftw_destroy_plan(fwd_);
        if (bwd_) fftw_destroy_plan(bwd_);
    }

    bool empty() const { return empty_; }
    double intensity() const { return intensity_; }
    double compensator() const { return compensator_; }
    double small_variance() const { return small_variance_; }
    double left_mass() const { return left_mass_; }
    double left_exp() const { return left_exp_; }

    /// out[i] = sum_k w_k pbar[i + k + n] for i in [0, n]; pbar covers nodes -n..n.
    void correlate(const std::vector<double>& pbar, std::vector<double>& out) {
        std::fill(real_.get(), real_.get() + len_, 0.0);
        std::copy(pbar.begin(), pbar.end(), real_.get());
        fftw_execute(fwd_);
        const std::size_t m = len_ / 2 + 1;
        for (std::size_t k = 0; k < m; ++k) {
            const std::complex<double> p(spec_.get()[k][0], spec_.get()[k][1]);
            const std::complex<double> v = p * kernel_hat_[k];
            spec_.get()[k][0] = v.real();
            spec_.get()[k][1] = v.imag();
        }
        fftw_execute(bwd_);
        const double scale = 1.0 / static_cast<double>(len_);
        out.resize(n_ + 1);
        for (int i = 0; i <= n_; ++i) out[i] = real_.get()[i + 2 * n_ + 1] * scale;
    }

private:
    void plan() {
        len_ = fft_size(4 * static_cast<std::size_t>(n_) + 3);
        const std::size_t m = len_ / 2 + 1;
        real_.reset(static_cast<double*>(fftw_malloc(sizeof(double) * len_)));
        spec_.reset(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * m)));
        const int len = static_cast<int>(len_);
        fwd_ = fftw_plan_dft_r2c_1d(len, real_.get(), spec_.get(), FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_1d(len, spec_.get(), real_.get(), FFTW_ESTIMATE);
        // kernel r[q] = w_{n+1-q}, q in [0, 2n+1]
        std::fill(real_.get(), real_.get() + len_, 0.0);
        for (int q = 0; q <= 2 * n_ + 1; ++q) real_.get()[q] = w_[(n_ + 1 - q) + n_];
        fftw_execute(fwd_);
        kernel_hat_.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            kernel_hat_[k] = {spec_.get()[k][0], spec_.get()[k][1]};
        }
    }

    int n_;
    std::vector<double> w_;
    double intensity_ = 0.0;
    double compensator_ = 0.0;
    double small_variance_ = 0.0;
    double left_mass_ = 0.0;
    double left_exp_ = 0.0;
    bool empty_ = true;

    std::size_t len_ = 0;
    std::unique_ptr<double, FftwFree> real_;
    std::unique_ptr<fftw_complex, FftwFree> spec_;
    std::vector<std::complex<double>> kernel_hat_;
    fftw_plan fwd_ = nullptr;
    fftw_plan bwd_ = nullptr;
};

std::vector<double> time_steps(const Grid& grid, const SolverOptions& opt, double intensity) {
    const double h = grid.T / grid.n_t;
    const double cap = intensity > 0.0 ? 0.5 / intensity : kInf;
    std::vector<double> cps = grid.checkpoints;
    std::sort(cps.begin(), cps.end());

    std::vector<double> steps;
    double tau = 0.0;
    double step = h / opt.first_step_divisor;
    const double eps = 1e-12 * grid.T;
    while (tau < grid.T - eps) {
        double s = std::min(step, h);
        if (grid.T - (tau + s) < 1e-3 * s) s = grid.T - tau;
        for (double cp : cps) {
            if (cp > tau + eps && cp < tau + s - eps) {
                s = cp - tau;
                break;
            }
        }
        const int pieces = std::max(1, static_cast<int>(std::ceil(s / cap - 1e-12)));
        for (int p = 0; p < pieces; ++p) steps.push_back(s / pieces);
        tau += s;
        step *= opt.refine_ratio;
    }
    return steps;
}

void validate(const LevyModel& model, double strike, const Grid& g, const SolverOptions& opt) {
    if (!(strike > 0.0)) throw InvalidInput("strike must be > 0");
    if (!(g.T > 0.0) || !std::isfinite(g.T)) throw InvalidInput("maturity must be > 0");
    if (g.n_x < 200) throw InvalidInput("grid needs n_x >= 200");
    if (g.n_t < 100) throw InvalidInput("grid needs n_t >= 100");
    if (!(g.x_min < g.x_max)) throw InvalidInput("grid needs x_min < x_max");
    for (double cp : g.checkpoints) {
        if (!(cp > 0.0 && cp <= g.T)) throw InvalidInput("checkpoints must lie in (0, T]");
    }
    const RegimeReport rep = classify_regime(model, strike);
    if (rep.d >= 0.0 && !model.positive_finite_variation()) {
        throw UnsupportedRegime("d >= 0 requires finite-variation positive jumps");
    }
    if (opt.check_domain && opt.style == ExerciseStyle::American) {
        const double margin = 5.0 * model.sigma() * std::sqrt(g.T);
        if (!(g.x_max > std::log(strike) + margin)) {
            throw InvalidInput(fmt::format("x_max must exceed ln K + 5 sigma sqrt(T) = {}",
                                           std::log(strike) + margin));
        }
        if (rep.limit_value > 0.0 && !(g.x_min < std::log(rep.limit_value) - margin)) {
            throw InvalidInput(fmt::format("x_min must lie below ln(limit) - 5 sigma sqrt(T) = {}",
                                           std::log(rep.limit_value) - margin));
        }
    }
}

}  // namespace

double PriceSurface::obstacle(std::size_t i) const {
    return std::max(strike - std::exp(x[i]), 0.0);
}

double PriceSurface::value_at(std::size_t j, double spot) const {
    const auto& v = values.at(j);
    const double xq = std::clamp(std::log(spot), x.front(), x.back());
    const double dx = grid.dx();
    const double f = (xq - x.front()) / dx;
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(f), x.size() - 2);
    const double u = f - static_cast<double>(i);
    // interpolate the premium over the payoff so exercised cells return the payoff exactly;
    // the cell holding the kink at ln K interpolates P itself
    const double ln_k = std::log(strike);
    if (x[i] < ln_k && x[i + 1] > ln_k) return (1.0 - u) * v[i] + u * v[i + 1];
    const double e = (1.0 - u) * (v[i] - obstacle(i)) + u * (v[i + 1] - obstacle(i + 1));
    return e + std::max(strike - std::exp(xq), 0.0);
}

std::size_t PriceSurface::slice_near(double tau_query) const {
    std::size_t best = 0;
    for (std::size_t j = 1; j < tau.size(); ++j) {
        if (std::abs(tau[j] - tau_query) < std::abs(tau[best] - tau_query)) best = j;
    }
    return best;
}

PriceSurface solve(const LevyModel& model, double strike, const Grid& grid,
                   const SolverOptions& options) {
    validate(model, strike, grid, options);
    const bool american = options.style == ExerciseStyle::American;
    const int n = grid.n_x - 1;
    const double dx = grid.dx();

    PriceSurface surf;
    surf.grid = grid;
    surf.options = options;
    surf.strike = strike;
    surf.style = options.style;
    surf.diffusive = model.sigma() > 0.0;
    surf.rate = model.r();
    surf.x.resize(n + 1);
    for (int i = 0; i <= n; ++i) surf.x[i] = grid.x_min + i * dx;

    JumpStencil jumps(model, dx, n);
    const double lam = jumps.intensity();
    const double s2 = model.sigma() * model.sigma() + jumps.small_variance();
    const double mu = model.r() - model.delta() - 0.5 * s2 - jumps.compensator();
    surf.sigma_eff = std::sqrt(s2);
    surf.jump_intensity = lam;

    const double diff = 0.5 * s2 / (dx * dx);
    const double adv = mu / (2.0 * dx);
    const bool central = diff >= std::abs(adv);
    double off_lo = -(diff - adv);
    double off_hi = -(diff + adv);
    double diag_extra = 2.0 * diff;
    if (!central) {
        off_lo = -diff - (mu < 0.0 ? -mu / dx : 0.0);
        off_hi = -diff - (mu > 0.0 ? mu / dx : 0.0);
        diag_extra = 2.0 * diff + std::abs(mu) / dx;
    }

    std::vector<double> g(n + 1);
    std::vector<double> ex(n + 1);
    for (int i = 0; i <= n; ++i) {
        ex[i] = std::exp(surf.x[i]);
        g[i] = std::max(strike - ex[i], 0.0);
    }
    std::vector<double> lcp_obstacle(n + 1, american ? 0.0 : -kInf);
    if (american) lcp_obstacle = g;

    auto extension = [&](double tau, double xv) {
        const double ck = american ? 1.0 : std::exp(-model.r() * tau);
        const double cs = american ? 1.0 : std::exp(-model.delta() * tau);
        return std::max(ck * strike - cs * std::exp(xv), 0.0);
    };

    std::vector<double> p = g;
    surf.tau.push_back(0.0);
    surf.values.push_back(p);

    auto mask_of = [&](const std::vector<double>& v) {
        std::vector<std::uint8_t> m(n + 1, 0);
        if (!american) return m;
        const double ln_k = std::log(strike);
        for (int i = 0; i < n; ++i) {
            m[i] = (surf.x[i] < ln_k && v[i] - g[i] < kExerciseTol * strike) ? 1 : 0;
        }
        return m;
    };
    surf.exercise_mask.push_back(mask_of(p));

    const std::vector<double> steps = time_steps(grid, options, lam);
    std::vector<double> pbar(2 * n + 1);
    std::vector<double> jterm(n + 1, 0.0);
    std::vector<double> jprev(n + 1, 0.0);
    std::vector<double> pprev;
    std::vector<double> rhs(n + 1);
    std::vector<double> next(n + 1);
    Tridiagonal a(n + 1);
    double tau = 0.0;
    double dt_prev = 0.0;
    double worst = 0.0;

    auto jump_term = [&](const std::vector<double>& v, double at_tau, std::vector<double>& out) {
        if (jumps.empty()) {
            std::fill(out.begin(), out.end(), 0.0);
            return;
        }
        for (int m = -n; m < 0; ++m) pbar[m + n] = extension(at_tau, grid.x_min + m * dx);
        for (int i = 0; i <= n; ++i) pbar[i + n] = v[i];
        jumps.correlate(pbar, out);
        const double ck = american ? 1.0 : std::exp(-model.r() * at_tau);
        const double cs = american ? 1.0 : std::exp(-model.delta() * at_tau);
        for (int i = 0; i <= n; ++i) {
            out[i] += ck * strike * jumps.left_mass() - cs * ex[i] * jumps.left_exp();
        }
    };

    for (double dt : steps) {
        jprev.swap(jterm);
        jump_term(p, tau, jterm);
        const bool bdf2 = options.scheme == TimeScheme::Bdf2 && !pprev.empty();
        const double w = bdf2 ? dt / dt_prev : 0.0;
        const double c_new = bdf2 ? (1.0 + 2.0 * w) / ((1.0 + w) * dt) : 1.0 / dt;
        const double c_cur = bdf2 ? (1.0 + w) / dt : 1.0 / dt;
        const double c_old = bdf2 ? w * w / ((1.0 + w) * dt) : 0.0;
        const double tau_new = tau + dt;
        const double d0 = c_new + model.r() + lam + diag_extra;
        for (int i = 1; i < n; ++i) {
            a.lower[i] = off_lo;
            a.diag[i] = d0;
            a.upper[i] = off_hi;
            double r = c_cur * p[i] + (bdf2 ? (1.0 + w) * jterm[i] - w * jprev[i] : jterm[i]);
            if (bdf2) r -= c_old * pprev[i];
            rhs[i] = r;
        }
        a.lower[0] = a.upper[0] = 0.0;
        a.diag[0] = 1.0;
        rhs[0] = extension(tau_new, surf.x[0]);
        a.lower[n] = a.upper[n] = 0.0;
        a.diag[n] = 1.0;
        rhs[n] = 0.0;

        if (american) {
            if (options.lcp == LcpMethod::BrennanSchwartz) {
                brennan_schwartz(a, rhs, lcp_obstacle, next);
            } else {
                next = p;
                psor(a, rhs, lcp_obstacle, next, options.psor_omega, options.psor_tol);
            }
        } else {
            solve_tridiagonal(a, rhs, next);
        }
        worst = std::max(worst, complementarity_residual(a, rhs, lcp_obstacle, next));
        pprev = p;
        p.swap(next);
        dt_prev = dt;
        tau = tau_new;
        surf.tau.push_back(tau);
        surf.values.push_back(p);
        surf.exercise_mask.push_back(mask_of(p));
    }
    surf.max_complementarity_residual = worst;
    if (worst > 1e-10 * strike) {
        throw GridTooCoarse(fmt::format("complementarity residual {:.3e} exceeds 1e-10 K", worst));
    }
    // convexity in s on the final slice
    const auto& v = surf.values.back();
    for (int i = 1; i < n; ++i) {
        const double slope = (v[i] - v[i - 1]) / (ex[i] - ex[i - 1]);
        const double chord = v[i] + slope * (ex[i + 1] - ex[i]);
        if (v[i + 1] < chord - 1e-6 * strike) {
            throw GridTooCoarse(fmt::format("convexity violated at s = {}", ex[i]));
        }
    }
    return surf;
}

BoundaryCurve extract_boundary(const PriceSurface& surface) {
    if (surface.style != ExerciseStyle::American) {
        throw InvalidInput("European surfaces have no exercise boundary");
    }
    if (!(surface.rate > 0.0)) {
        throw EmptyExerciseRegion("r = 0: early exercise is never optimal");
    }
    const std::size_t n = surface.x.size() - 1;
    const double dx = surface.grid.dx();
    BoundaryCurve curve;
    for (std::size_t j = 0; j < surface.tau.size(); ++j) {
        curve.tau.push_back(surface.tau[j]);
        curve.t.push_back(surface.t(j));
        if (j == 0) {
            curve.b.push_back(surface.strike);
            curve.resolution.push_back(0.0);
            continue;
        }
        const auto& mask = surface.exercise_mask[j];
        const auto& v = surface.values[j];
        std::size_t last = 0;
        while (last + 1 < n && mask[last + 1]) ++last;
        if (last == 0 || last + 2 > n) {
            throw GridTooCoarse(fmt::format("exercise boundary left the grid at tau = {}",
                                            surface.tau[j]));
        }
        const std::size_t c1 = last + 1;
        const std::size_t c2 = last + 2;
        const double e1 = std::max(v[c1] - surface.obstacle(c1), 0.0);
        const double e2 = std::max(v[c2] - surface.obstacle(c2), 0.0);
        double xb = surface.x[last];
        if (surface.diffusive) {
            const double r1 = std::sqrt(e1);
            const double r2 = std::sqrt(e2);
            if (r2 > r1) xb = surface.x[c1] - r1 * dx / (r2 - r1);
        } else if (e2 > e1) {
            xb = surface.x[c1] - e1 * dx / (e2 - e1);
        }
        xb = std::clamp(xb, surface.x[last - 1], surface.x[c1]);
        const double b = std::exp(xb);
        curve.b.push_back(b);
        curve.resolution.push_back(b * std::expm1(dx));
    }
    return curve;
}

PremiumReport premium(PriceSurface& surface, const LevyModel& model) {
    if (surface.style != ExerciseStyle::American) throw InvalidInput("premium needs an American surface");
    SolverOptions opt = surface.options;
    opt.style = ExerciseStyle::European;
    opt.check_domain = false;
    const PriceSurface euro = solve(model, surface.strike, surface.grid, opt);

    const double k = surface.strike;
    const double tol = 1e-6 * k;
    PremiumReport rep;
    rep.min_e = kInf;
    rep.max_excess = -kInf;
    rep.max_increase = -kInf;
    double worst = 0.0;
    double worst_x = 0.0;
    double worst_tau = 0.0;
    std::string what;
    auto flag = [&](double amount, std::size_t i, std::size_t j, const char* kind) {
        if (amount > worst) {
            worst = amount;
            worst_x = surface.x[i];
            worst_tau = surface.tau[j];
            what = kind;
        }
    };
    for (std::size_t j = 0; j < surface.tau.size(); ++j) {
        const auto& pa = surface.values[j];
        const auto& pe = euro.values[j];
        std::vector<double> e(pa.size());
        const double bound = model.r() * k * surface.tau[j];
        for (std::size_t i = 0; i < pa.size(); ++i) {
            e[i] = pa[i] - pe[i];
            rep.min_e = std::min(rep.min_e, e[i]);
            rep.max_excess = std::max(rep.max_excess, e[i] - bound);
            if (e[i] < -tol) flag(-e[i] - tol, i, j, "negative premium");
            if (e[i] > bound + tol) flag(e[i] - bound - tol, i, j, "premium above r K theta");
            if (i > 0) {
                const double inc = e[i] - e[i - 1];
                rep.max_increase = std::max(rep.max_increase, inc);
                if (inc > tol) flag(inc - tol, i, j, "premium increasing in s");
            }
        }
        rep.e.push_back(std::move(e));
    }
    surface.premium = rep.e;
    if (worst > 0.0) {
        throw BoundViolation(fmt::format("{} at x = {}, tau = {} (excess {:.3e})", what, worst_x,
                                         worst_tau, worst),
                             worst_x, worst_tau);
    }
    return rep;
}

SurfaceDiagnostics diagnose_surface(const PriceSurface& surface, double tol_rel) {
    SurfaceDiagnostics d;
    const double tol = tol_rel * surface.strike;
    const bool american = surface.style == ExerciseStyle::American;
    const std::size_t n = surface.x.size();
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::exp(surface.x[i]);
    auto note = [&](int& counter, const std::string& msg) {
        ++counter;
        if (d.first_failure.empty()) d.first_failure = msg;
    };
    for (std::size_t j = 0; j < surface.values.size(); ++j) {
        const auto& v = surface.values[j];
        for (std::size_t i = 0; i < n; ++i) {
            const double g = surface.obstacle(i);
            if (j == 0 && std::abs(v[i] - g) > 1e-12 * surface.strike) {
                note(d.terminal, fmt::format("terminal slice differs from payoff at s={}", s[i]));
            }
            if (american && v[i] < g - tol) {
                note(d.obstacle, fmt::format("below obstacle at s={}, tau={}", s[i], surface.tau[j]));
            }
            if (american && j > 0 && v[i] < surface.values[j - 1][i] - tol) {
                note(d.monotone_t, fmt::format("decreasing in tau at s={}, tau={}", s[i], surface.tau[j]));
            }
            if (i + 1 < n) {
                const double dv = v[i + 1] - v[i];
                const double ds = s[i + 1] - s[i];
                if (dv > tol) {
                    note(d.monotone_s, fmt::format("increasing in s at s={}, tau={}", s[i], surface.tau[j]));
                }
                if (std::abs(dv) > (1.0 + 1e-6) * ds + 1e-12 * surface.strike) {
                    note(d.lipschitz, fmt::format("slope beyond 1 at s={}, tau={}", s[i], surface.tau[j]));
                }
                if (i > 0) {
                    const double slope = (v[i] - v[i - 1]) / (s[i] - s[i - 1]);
                    if (v[i + 1] < v[i] + slope * ds - tol) {
                        note(d.convex_s, fmt::format("not convex at s={}, tau={}", s[i], surface.tau[j]));
                    }
                }
            }
        }
    }
    return d;
}

Grid near_maturity_grid(const LevyModel& model, double strike, double limit, double theta,
                        double gap_estimate, int n_t, double points_per_scale) {
    if (!(theta > 0.0)) throw InvalidInput("theta must be > 0");
    if (!(limit > 0.0 && limit <= strike)) throw InvalidInput("limit must lie in (0, K]");
    const double sig = model.sigma() * std::sqrt(theta);
    const double gap_log = std::max(gap_estimate, 0.0) / limit;
    const double scale = sig > 0.0 ? sig : gap_log;
    if (!(scale > 0.0)) throw InvalidInput("cannot size a grid without sigma or a gap estimate");
    const double dx = scale / points_per_scale;
    const double x_lo = std::log(limit) - (6.0 * gap_log + 10.0 * sig + 20.0 * dx);
    const double x_hi = std::log(strike) + std::max(12.0 * sig, 6.0 * gap_log) + 20.0 * dx;
    Grid g;
    g.n_x = std::max(200, static_cast<int>(std::ceil((x_hi - x_lo) / dx)) + 1);
    g.x_min = x_lo;
    g.x_max = x_lo + (g.n_x - 1) * dx;
    g.T = theta;
    g.n_t = std::max(100, n_t);
    return g;
}

void write_surface_csv(const std::string& path, const PriceSurface& surface) {
    CsvWriter w(path, {"t", "x", "P", "exercised"});
    for (std::size_t j = 0; j < surface.tau.size(); ++j) {
        for (std::size_t i = 0; i < surface.x.size(); ++i) {
            w.row({CsvWriter::num(surface.t(j)), CsvWriter::num(surface.x[i]),
                   CsvWriter::num(surface.values[j][i]),
                   surface.exercise_mask[j][i] ? "1" : "0"});
        }
    }
}

void write_boundary_csv(const std::string& path, const BoundaryCurve& curve) {
    CsvWriter w(path, {"t", "b", "resolution"});
    for (std::size_t j = 0; j < curve.t.size(); ++j) {
        w.row({CsvWriter::num(curve.t[j]), CsvWriter::num(curve.b[j]),
               CsvWriter::num(curve.resolution[j])});
    }
}

}  // namespace levylab
