#include "couette3d/toy_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace couette {

void ToyParams::validate() const {
    if (!(eps >= 0.0 && c0 >= 0.0 && nu > 0.0))
        throw std::invalid_argument("ToyParams: need eps, c0 >= 0 and nu > 0");
    if (k < 1 || kprime < 1 || std::abs(k - kprime) != 1)
        throw std::invalid_argument("ToyParams: need k, kprime >= 1 with |k - kprime| = 1");
    if (!(eta >= 0.0)) throw std::invalid_argument("ToyParams: eta must be nonnegative");
    if (l < 0) throw std::invalid_argument("ToyParams: l must be nonnegative");
}

double ToyState::max_component() const {
    return std::max({Q2k, Q2kp, Q3kp, Q3k, Q20, Q30});
}

namespace {

// Tendency without the dissipation terms; the integrator applies those
// exactly through integrating factors.
ToyState rhs_core(const ToyState& s, double t, const ToyParams& p) {
    const double drive = std::max(p.eps * t, p.c0);
    const double dk = p.k;
    const double res = std::abs(p.eta - dk * t);       // |eta - k t|
    const double res2 = dk * dk + res * res;           // k^2 + |eta - k t|^2
    const double kern = dk / (dk + res);               // resonance kernel
    const double kern_nr = p.kprime / std::sqrt(1.0 + double(p.kprime) * p.kprime + t * t);
    const double nut3 = p.nu * t * t * t;
    const double fb = p.eps * t * t * t / std::pow(1.0 + nut3 * nut3, 0.5 * p.alpha) / res2;

    ToyState d;
    d.Q2k = p.couple_si ? drive * kern * s.Q3k : 0.0;
    d.Q2kp = p.couple_si ? drive * kern_nr * s.Q3kp : 0.0;
    d.Q3kp = p.couple_3de ? fb * s.Q2k : 0.0;
    d.Q3k = p.couple_si ? kern * s.Q3k + kern * s.Q2k : 0.0;
    d.Q20 = p.couple_zero ? p.eps * s.Q30 + fb / t * s.Q2k : 0.0;
    d.Q30 = p.couple_zero ? p.eps * s.Q30 + fb * s.Q2k : 0.0;
    return d;
}

}  // namespace

ToyState toy_rhs(const ToyState& s, double t, const ToyParams& p) {
    const double res = std::abs(p.eta - p.k * t);
    const double diss = p.nu * (double(p.k) * p.k + res * res);
    const double diss0 = p.nu * p.eta * p.eta;
    ToyState d = rhs_core(s, t, p);
    d.Q2k -= diss * s.Q2k;
    d.Q2kp -= diss * s.Q2kp;
    d.Q3kp -= diss * s.Q3kp;
    d.Q3k -= diss * s.Q3k;
    d.Q20 -= diss0 * s.Q20;
    d.Q30 -= diss0 * s.Q30;
    return d;
}

namespace {

ToyState axpy(const ToyState& a, double h, const ToyState& b) {
    return {a.Q2k + h * b.Q2k,  a.Q2kp + h * b.Q2kp, a.Q3kp + h * b.Q3kp,
            a.Q3k + h * b.Q3k, a.Q20 + h * b.Q20,   a.Q30 + h * b.Q30};
}

ToyState scale(const ToyState& s, double dnz, double d0) {
    return {dnz * s.Q2k, dnz * s.Q2kp, dnz * s.Q3kp, dnz * s.Q3k, d0 * s.Q20, d0 * s.Q30};
}

// exact integral of nu (k^2 + (eta - k tau)^2) over [a, b]
double diss_integral(double a, double b, const ToyParams& p) {
    const double k = p.k;
    const double ra = p.eta - k * a, rb = p.eta - k * b;
    return p.nu * (k * k * (b - a) + (ra * ra * ra - rb * rb * rb) / (3.0 * k));
}

// Lawson RK4: the stiff dissipation enters only through exact decay factors,
// so the step is stable for any nu eta^2.
ToyState rk4_step(const ToyState& s, double t, double h, const ToyParams& p) {
    const double ehalf = std::exp(-diss_integral(t, t + 0.5 * h, p));
    const double e2 = std::exp(-diss_integral(t + 0.5 * h, t + h, p));
    const double efull = ehalf * e2;
    const double z0 = p.nu * p.eta * p.eta;
    const double zhalf = std::exp(-0.5 * h * z0);
    const double zfull = std::exp(-h * z0);

    const ToyState g1 = rhs_core(s, t, p);
    const ToyState u2 = axpy(scale(s, ehalf, zhalf), 0.5 * h, scale(g1, ehalf, zhalf));
    const ToyState g2 = rhs_core(u2, t + 0.5 * h, p);
    const ToyState u3 = axpy(scale(s, ehalf, zhalf), 0.5 * h, g2);
    const ToyState g3 = rhs_core(u3, t + 0.5 * h, p);
    const ToyState u4 = axpy(scale(s, efull, zfull), h, scale(g3, e2, std::exp(-0.5 * h * z0)));
    const ToyState g4 = rhs_core(u4, t + h, p);

    ToyState out = scale(s, efull, zfull);
    out = axpy(out, h / 6.0, scale(g1, efull, zfull));
    out = axpy(out, h / 3.0, scale(g2, e2, std::exp(-0.5 * h * z0)));
    out = axpy(out, h / 3.0, scale(g3, e2, std::exp(-0.5 * h * z0)));
    out = axpy(out, h / 6.0, g4);
    return out;
}

}  // namespace

std::vector<ToySample> integrate_toy(const ToyParams& p, double t0, double t1,
                                     const ToyState& init, double dt) {
    p.validate();
    if (!(t0 >= 1.0 && t1 > t0)) throw std::invalid_argument("integrate_toy: need 1 <= t0 < t1");
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_toy: dt must be positive");

    // Keep max(eps t, c0) smooth within every step.
    std::vector<double> stops = {t1};
    if (p.eps > 0.0) {
        const double kink = p.c0 / p.eps;
        if (kink > t0 && kink < t1) stops.insert(stops.begin(), kink);
    }

    std::vector<ToySample> traj;
    ToyState s = init;
    double t = t0;
    traj.push_back({t, s});
    for (double stop : stops) {
        const int n = std::max(1, int(std::ceil((stop - t) / dt - 1e-12)));
        const double h = (stop - t) / n;
        for (int i = 0; i < n; ++i) {
            s = rk4_step(s, t, h, p);
            t += h;
            traj.push_back({t, s});
        }
        t = stop;
        traj.back().t = t;
    }
    return traj;
}

double interval_growth_ratio(double eta, int k) {
    if (k < 1 || double(k) * k > eta)
        throw std::invalid_argument("interval_growth_ratio: need 1 <= k^2 <= eta");
    const double r = 1.0 + eta / (double(k) * k);
    return r * r;
}

double stirling_total_growth(double eta) {
    if (!(eta >= 1.0)) throw std::invalid_argument("stirling_total_growth: eta must be >= 1");
    const double se = std::sqrt(eta);
    return se * std::log(eta) - 2.0 * std::lgamma(se + 1.0);
}

double supersolution_constant(const std::vector<ToySample>& traj, double eta, double kappa) {
    double K = 0.0;
    for (const auto& s : traj)
        K = std::max(K, s.state.max_component() / w_full(s.t, eta, kappa));
    return K;
}

}  // namespace couette
