#include "couette3d/multipliers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "couette3d/spectral_ops.hpp"

namespace couette {

namespace {

double jap(double x) { return std::sqrt(1.0 + x * x); }
double jap2(double a, double b) { return std::sqrt(1.0 + a * a + b * b); }
double jap3v(double a, double b, double c) { return std::sqrt(1.0 + a * a + b * b + c * c); }

// Adaptive Simpson quadrature.
double simpson(double (*f)(double, double), double m, double a, double b) {
    return (b - a) / 6.0 * (f(a, m) + 4.0 * f(0.5 * (a + b), m) + f(b, m));
}

double adapt(double (*f)(double, double), double m, double a, double b, double whole, double tol,
             int depth) {
    const double c = 0.5 * (a + b);
    const double left = simpson(f, m, a, c);
    const double right = simpson(f, m, c, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt(f, m, a, c, left, 0.5 * tol, depth - 1) +
           adapt(f, m, c, b, right, 0.5 * tol, depth - 1);
}

double lam_integrand(double tau, double m) { return std::pow(1.0 + tau * tau, -0.5 * m); }

double lam_integral(double a, double b, double m) {
    if (b <= a) return 0.0;
    return adapt(lam_integrand, m, a, b, simpson(lam_integrand, m, a, b), 1e-13, 48);
}

}  // namespace

std::optional<double> critical_time(int k, double eta) {
    if (k == 0 || eta == 0.0) return std::nullopt;
    if ((k > 0) != (eta > 0.0)) return std::nullopt;
    const double ak = std::abs(k);
    const double ae = std::abs(eta);
    if (ak > std::floor(std::sqrt(ae))) return std::nullopt;
    const double t1 = ae / ak - ae / (2.0 * ak * (ak + 1.0));
    const double t2 = ae / (ak + 1.0) + ae / (2.0 * ak * (ak + 1.0));
    assert(std::abs(t1 - t2) <= 1e-12 * std::max(1.0, t1));
    return t2;
}

double critical_time0(double eta) { return 2.0 * std::abs(eta); }

CriticalSchedule::CriticalSchedule(double eta_in) : eta(std::abs(eta_in)) {
    kmax = eta > 0.0 ? int(std::floor(std::sqrt(eta))) : 0;
    times.resize(kmax + 1);
    times[0] = 2.0 * eta;
    for (int k = 1; k <= kmax; ++k)
        times[k] = eta / (k + 1.0) + eta / (2.0 * k * (k + 1.0));
}

std::optional<Interval> CriticalSchedule::interval(int k) const {
    if (k < 1 || k > kmax) return std::nullopt;
    return Interval{times[k], times[k - 1]};
}

std::optional<Interval> CriticalSchedule::resonant_interval(int k) const {
    auto iv = interval(k);
    if (!iv || 2.0 * std::sqrt(eta) > iv->lo) return std::nullopt;
    return iv;
}

WProfile::WProfile(double eta, double kappa) : eta_(std::abs(eta)), kappa_(kappa) {
    kmax_ = eta_ > 0.0 ? int(std::floor(std::sqrt(eta_))) : 0;
    tk_.resize(kmax_ + 1);
    logw_tk_.resize(kmax_ + 1);
    tk_[0] = 2.0 * eta_;
    logw_tk_[0] = 0.0;
    for (int k = 1; k <= kmax_; ++k) {
        tk_[k] = eta_ / (k + 1.0) + eta_ / (2.0 * k * (k + 1.0));
        const double r = double(k) * k / eta_;
        logw_tk_[k] = (1.0 + 2.0 * kappa_) * std::log(r) + logw_tk_[k - 1];
    }
}

double WProfile::log_w_bar(double t) const {
    t = std::abs(t);
    if (kmax_ == 0 || t >= tk_[0]) return 0.0;
    if (t <= tk_[kmax_]) return logw_tk_[kmax_];
    // tk_ is strictly decreasing: find k with tk_[k] <= t <= tk_[k-1].
    int lo = 1, hi = kmax_;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (tk_[mid] <= t)
            hi = mid;
        else
            lo = mid + 1;
    }
    const int k = lo;
    const double r = double(k) * k / eta_;
    const double tc = eta_ / k;
    if (t >= tc) {
        const double b = k == 1 ? 1.0 - 1.0 / eta_ : 2.0 * (k - 1.0) / k * (1.0 - r);
        return kappa_ * std::log(r * (1.0 + b * (t - tc))) + logw_tk_[k - 1];
    }
    const double a = 2.0 * (k + 1.0) / k * (1.0 - r);
    return -(1.0 + kappa_) * std::log(1.0 + a * (tc - t)) + kappa_ * std::log(r) +
           logw_tk_[k - 1];
}

double WProfile::log_w(double t) const {
    if (eta_ == 0.0) return 0.0;
    const double se = std::sqrt(eta_);
    double loss = std::max(2.0 * se - t, 0.0);
    const double lower = std::max(t, se);
    if (lower < 2.0 * eta_) loss += eta_ * (1.0 / lower - 1.0 / (2.0 * eta_));
    return log_w_bar(t) - kappa_ * loss;
}

double WProfile::dtw_over_w(double t) const {
    if (eta_ == 0.0) return 0.0;
    double d = 0.0;
    const double se = std::sqrt(eta_);
    if (t <= 2.0 * se) d += kappa_;
    if (t >= se && t <= 2.0 * eta_ && t > 0.0) d += kappa_ * eta_ / (t * t);
    // log-derivative of the piecewise w_bar
    if (kmax_ > 0 && t > tk_[kmax_] && t < tk_[0]) {
        int lo = 1, hi = kmax_;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (tk_[mid] <= t)
                hi = mid;
            else
                lo = mid + 1;
        }
        const int k = lo;
        const double r = double(k) * k / eta_;
        const double tc = eta_ / k;
        if (t >= tc) {
            const double b = k == 1 ? 1.0 - 1.0 / eta_ : 2.0 * (k - 1.0) / k * (1.0 - r);
            d += kappa_ * b / (1.0 + b * (t - tc));
        } else {
            const double a = 2.0 * (k + 1.0) / k * (1.0 - r);
            d += (1.0 + kappa_) * a / (1.0 + a * (tc - t));
        }
    }
    return d;
}

namespace {

std::shared_mutex wcache_mutex;
std::map<std::pair<double, double>, std::shared_ptr<const WProfile>> wcache;

std::shared_ptr<const WProfile> wprofile(double eta, double kappa) {
    const std::pair<double, double> key{std::abs(eta), kappa};
    {
        std::shared_lock lock(wcache_mutex);
        auto it = wcache.find(key);
        if (it != wcache.end()) return it->second;
    }
    auto p = std::make_shared<const WProfile>(eta, kappa);
    std::unique_lock lock(wcache_mutex);
    return wcache.emplace(key, std::move(p)).first->second;
}

}  // namespace

double w_bar(double t, double eta, double kappa) { return wprofile(eta, kappa)->w_bar(t); }
double w_full(double t, double eta, double kappa) { return wprofile(eta, kappa)->w(t); }
double log_w_full(double t, double eta, double kappa) { return wprofile(eta, kappa)->log_w(t); }
double dtw_over_w(double t, double eta, double kappa) {
    return wprofile(eta, kappa)->dtw_over_w(t);
}

double WLProfile::value(double t) const {
    if (k == 0) return 1.0;
    const double r = std::sqrt(double(k) * k + double(l) * l);
    const double s = k > 0 ? 1.0 : -1.0;
    const double arg = kappa * jap(double(l)) / r *
                       (std::atan((k * t - eta) / r) - std::atan((k - eta) / r)) * s;
    return std::exp(arg);
}

double WLProfile::dtlog(double t) const {
    if (k == 0) return 0.0;
    const double kt = eta - k * t;
    return kappa * std::abs(k) * jap(double(l)) / (double(k) * k + double(l) * l + kt * kt);
}

double w_L_value(double t, int k, double eta, int l, double kappa) {
    return WLProfile{k, eta, l, kappa}.value(t);
}

double D_value(double t, double eta, double nu, int alpha) {
    const double ae = std::abs(eta);
    const double cube = t * t * t - 8.0 * ae * ae * ae;
    return nu * ae * ae * ae / (3.0 * alpha) + nu * std::max(cube, 0.0) / (24.0 * alpha);
}

double lambda_of_t(double t, const MultiplierParams& p) {
    const double m = std::min(2.0 * p.s, 1.5);
    const double lam1 = 0.75 * p.lambda0 + 0.25 * p.lambda_prime;
    if (p.delta_lambda == 0.0 || t <= 1.0) return lam1;
    double integral;
    const double tcap = 1e6;
    if (t <= tcap) {
        integral = lam_integral(1.0, t, m);
    } else {
        // tail of (1+tau^2)^{-m/2} ~ tau^{-m} (1 - m/(2 tau^2))
        integral = lam_integral(1.0, tcap, m);
        const double hi = std::isinf(t) ? 0.0 : std::pow(t, 1.0 - m) / (m - 1.0) -
                                                   0.5 * m * std::pow(t, -1.0 - m) / (m + 1.0);
        integral += std::pow(tcap, 1.0 - m) / (m - 1.0) -
                    0.5 * m * std::pow(tcap, -1.0 - m) / (m + 1.0) - hi;
    }
    return lam1 - p.delta_lambda * integral;
}

void MultiplierParams::validate_and_calibrate() {
    if (!(s > 0.5 && s < 1.0)) throw std::invalid_argument("MultiplierParams: s must be in (1/2,1)");
    if (!(lambda0 > lambda_prime && lambda_prime > 0.0))
        throw std::invalid_argument("MultiplierParams: need lambda0 > lambda_prime > 0");
    if (!(delta_lambda > 0.0)) throw std::invalid_argument("MultiplierParams: delta_lambda <= 0");
    if (!(kappa > 2.0)) throw std::invalid_argument("MultiplierParams: kappa must exceed 2");
    if (alpha < 10) throw std::invalid_argument("MultiplierParams: alpha must be >= 10");
    if (!(beta > 3.0 * alpha + 6.0))
        throw std::invalid_argument("MultiplierParams: need beta > 3 alpha + 6");
    if (!(gamma > beta + 3.0 * alpha + 12.0))
        throw std::invalid_argument("MultiplierParams: need gamma > beta + 3 alpha + 12");
    if (!(sigma > gamma + 6.0)) throw std::invalid_argument("MultiplierParams: need sigma > gamma + 6");
    if (!(delta1 > 0.0 && delta1 < 1.0))
        throw std::invalid_argument("MultiplierParams: delta1 must be in (0,1)");
    if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("MultiplierParams: nu must be in (0,1]");
    const double lam_inf = lambda_of_t(std::numeric_limits<double>::infinity(), *this);
    if (!(lam_inf > 0.5 * (lambda0 + lambda_prime)))
        throw std::invalid_argument("MultiplierParams: delta_lambda drains lambda below (lambda0+lambda')/2");
    if (mu == 0.0) mu = calibrate_mu(kappa);
}

MultiplierParams MultiplierParams::make_default() {
    MultiplierParams p;
    p.validate_and_calibrate();
    return p;
}

double calibrate_mu(double kappa) {
    double best = 0.0;
    for (double eta = 1e2; eta <= 1e6 + 1.0; eta *= std::sqrt(10.0)) {
        const double loss = -log_w_full(1.0, eta, kappa);
        best = std::max(best, 2.0 * loss / std::sqrt(eta));
    }
    return 1.1 * best;
}

namespace {

double a_value_impl(AFamily fam, double t, int k, double eta, int l, const MultiplierParams& p,
                    double lam) {
    const double l1 = std::abs(k) + std::abs(eta) + std::abs(l);
    const double gev = std::exp(lam * std::pow(l1, p.s));
    const double jel = jap2(eta, double(l));

    auto nu_base = [&]() {
        if (k == 0) return 0.0;
        const double D = D_value(t, eta, p.nu, p.alpha);
        return gev * std::pow(jap3v(double(k), eta, double(l)), p.beta) *
               std::pow(1.0 + D * D, 0.5 * p.alpha) /
               w_L_value(t, k, eta, l, p.kappa);
    };
    auto q_base = [&](int kk) {
        // exponentials combined in log space so large eta stays finite longer
        const double logq = lam * std::pow(l1, p.s) +
                            p.sigma * std::log(jap3v(double(kk), eta, double(l))) +
                            p.mu * std::sqrt(std::abs(eta)) - log_w_full(t, eta, p.kappa) -
                            std::log(w_L_value(t, kk, eta, l, p.kappa));
        return std::exp(logq);
    };

    switch (fam) {
        case AFamily::Q:
            return q_base(k);
        case AFamily::A1:
            return (k != 0 ? std::min(1.0, std::pow(jel / t, 1.0 + p.delta1)) : 1.0) / jap(t) *
                   q_base(k);
        case AFamily::A2:
            return (k != 0 ? std::min(1.0, jel / t) : 1.0) * q_base(k);
        case AFamily::A3:
            return (k != 0 ? std::min(1.0, jel * jel / (t * t)) : 1.0) * q_base(k);
        case AFamily::A:
            return jel * jel * q_base(0);
        case AFamily::Nu1:
            return std::min(1.0, std::pow(jel / t, 1.0 + p.delta1)) / jap(t) * nu_base();
        case AFamily::Nu2:
            return std::min(1.0, std::pow(jel / t, p.delta1)) * nu_base();
        case AFamily::Nu3:
            return std::min(1.0, jel * jel / (t * t)) * nu_base();
    }
    return 0.0;
}

}  // namespace

double A_value(AFamily fam, double t, int k, double eta, int l, const MultiplierParams& p) {
    return a_value_impl(fam, t, k, eta, l, p, lambda_of_t(t, p));
}

double gevrey_norm(const SpectralField& f, double lambda, double sigma_idx, double s) {
    const GridSpec& g = f.grid;
    std::vector<double> terms;
    terms.reserve(f.c.size());
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double eta = g.eta(iy);
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const double amp = std::abs(f.c[g.index(ix, iy, iz)]);
                if (amp == 0.0) {
                    terms.push_back(0.0);
                    continue;
                }
                const double l1 = std::abs(k) + std::abs(eta) + std::abs(l);
                const double wgt = std::exp(lambda * std::pow(l1, s)) *
                                   std::pow(jap3v(double(k), eta, double(l)), sigma_idx);
                terms.push_back(wgt * amp * wgt * amp);
            }
        }
    }
    return std::sqrt(g.deta() * pairwise_sum(terms));
}

CKFunctionals ck_functionals(const SpectralField& f, AFamily fam, double t,
                             const MultiplierParams& p) {
    const GridSpec& g = f.grid;
    const double lam = lambda_of_t(t, p);
    const double m = std::min(2.0 * p.s, 1.5);
    const double lamdot = p.delta_lambda * std::pow(1.0 + t * t, -0.5 * m);
    std::vector<double> t_lam, t_w, t_wL, t_L, t_diss;
    const std::size_t n = f.c.size();
    t_lam.reserve(n);
    t_w.reserve(n);
    t_wL.reserve(n);
    t_L.reserve(n);
    t_diss.reserve(n);
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double eta = g.eta(iy);
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const double amp = std::abs(f.c[g.index(ix, iy, iz)]);
                if (amp == 0.0) continue;
                const double af = a_value_impl(fam, t, k, eta, l, p, lam) * amp;
                const double af2 = af * af;
                const double k2 = double(k) * k + eta * eta + double(l) * l;
                t_lam.push_back(lamdot * std::pow(k2, 0.5 * p.s) * af2);
                t_w.push_back(dtw_over_w(t, eta, p.kappa) * af2);
                t_wL.push_back(WLProfile{k, eta, l, p.kappa}.dtlog(t) * af2);
                if (k != 0 && t >= jap2(eta, double(l))) t_L.push_back(af2 / t);
                const double etl = eta - k * t;
                t_diss.push_back(p.nu * (double(k) * k + etl * etl + double(l) * l) * af2);
            }
        }
    }
    const double de = g.deta();
    CKFunctionals out;
    out.ck_lambda = de * pairwise_sum(t_lam);
    out.ck_w = de * pairwise_sum(t_w);
    out.ck_wL = de * pairwise_sum(t_wL);
    out.ck_L = de * pairwise_sum(t_L);
    out.dissipation = de * pairwise_sum(t_diss);
    return out;
}

}  // namespace couette
