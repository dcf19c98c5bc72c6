#pragma once

#include <optional>
#include <vector>

#include "couette3d/grid.hpp"

namespace couette {

/// Parameter set for the weighted-norm machinery. The ordering chain
/// beta > 3*alpha+6, gamma > beta+3*alpha+12, sigma > gamma+6 is checked at
/// construction, as is lambda(t) > (lambda0+lambda_prime)/2 for all t.
struct MultiplierParams {
    double s = 0.6;
    double lambda0 = 1.0;
    double lambda_prime = 0.1;
    double delta_lambda = 0.02;
    double kappa = 4.0;
    int alpha = 10;
    double beta = 40.0;
    double gamma = 90.0;
    double sigma = 100.0;
    double delta1 = 0.1;
    double mu = 0.0;  // 0 requests calibration from w(1,eta)
    double nu = 1.0;

    void validate_and_calibrate();

    static MultiplierParams make_default();
};

/// Critical times t_{k,eta} for k = 1..floor(sqrt(|eta|)), plus t_0 = 2|eta|.
/// Interval I_k = [t_k, t_{k-1}] covers [t_kmax, 2|eta|] without overlap.
/// The resonant subfamily keeps I_k only when 2 sqrt(|eta|) <= t_k.
struct Interval {
    double lo = 0.0, hi = 0.0;
};

struct CriticalSchedule {
    double eta = 0.0;  // stored as |eta|
    int kmax = 0;
    std::vector<double> times;  // times[k] = t_{k,eta}, k = 0..kmax

    explicit CriticalSchedule(double eta_in);

    std::optional<Interval> interval(int k) const;
    std::optional<Interval> resonant_interval(int k) const;
};

/// t_{k,eta} = |eta|/(k+1) + |eta|/(2k(k+1)) for 1 <= k <= floor(sqrt(|eta|));
/// empty past that range. t0 = 2|eta| is critical_time0.
std::optional<double> critical_time(int k, double eta);
double critical_time0(double eta);

/// Piecewise profile of the resonance weight at fixed eta, kappa. Breakpoint
/// values are built once by the backward recursion and cached.
class WProfile {
  public:
    WProfile(double eta, double kappa);

    double w_bar(double t) const { return std::exp(log_w_bar(t)); }
    double w(double t) const { return std::exp(log_w(t)); }
    // log-space forms stay finite where w itself underflows (eta >~ 1000)
    double log_w_bar(double t) const;
    double log_w(double t) const;
    double dtw_over_w(double t) const;  // piecewise closed-form log-derivative

    double eta() const { return eta_; }
    double kappa() const { return kappa_; }

  private:
    double eta_, kappa_;
    int kmax_;
    std::vector<double> tk_;       // t_0..t_kmax
    std::vector<double> logw_tk_;  // log w_bar at those breakpoints
};

double w_bar(double t, double eta, double kappa);
double w_full(double t, double eta, double kappa);
double log_w_full(double t, double eta, double kappa);
double dtw_over_w(double t, double eta, double kappa);

/// Anisotropy weight: dt log w_L = kappa |k|<l> / (k^2+l^2+|eta-kt|^2),
/// w_L(1) = 1, evaluated in closed form via arctangents. Bounded by e^{kappa pi}.
struct WLProfile {
    int k = 0;
    double eta = 0.0;
    int l = 0;
    double kappa = 4.0;

    double value(double t) const;
    double dtlog(double t) const;
};

double w_L_value(double t, int k, double eta, int l, double kappa);

/// D(t,eta) = nu |eta|^3 / (3 alpha) + nu (t^3 - 8|eta|^3)_+ / (24 alpha).
double D_value(double t, double eta, double nu, int alpha);

/// lambda(1) = 3 lambda0/4 + lambda'/4, decreasing by adaptive quadrature of
/// delta_lambda <t>^{-min(2s,3/2)}. Pass t = infinity for the limit.
double lambda_of_t(double t, const MultiplierParams& p);

enum class AFamily { Q, A1, A2, A3, A, Nu1, Nu2, Nu3 };

double A_value(AFamily fam, double t, int k, double eta, int l, const MultiplierParams& p);

/// sqrt( sum_modes ( e^{lambda |k,eta,l|^s} <k,eta,l>^sigma |f_hat| )^2 deta ).
double gevrey_norm(const SpectralField& f, double lambda, double sigma_idx, double s);

struct CKFunctionals {
    double ck_lambda = 0.0;
    double ck_w = 0.0;
    double ck_wL = 0.0;
    double ck_L = 0.0;
    double dissipation = 0.0;
};

CKFunctionals ck_functionals(const SpectralField& f, AFamily fam, double t,
                             const MultiplierParams& p);

/// mu := max over sampled eta of 2 log(1/w(1,eta)) / sqrt(eta), plus 10%.
double calibrate_mu(double kappa);

}  // namespace couette
