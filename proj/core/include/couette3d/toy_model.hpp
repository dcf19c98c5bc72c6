#pragma once

#include <vector>

#include "couette3d/multipliers.hpp"

namespace couette {

/// Six-component envelope model for one resonant pair (k, kprime) at fixed
/// (eta, l). The coupling switches recover the intermediate reduced models
/// by zeroing terms of the full system:
///   couple_si = false  drops the resonant stretching/forcing kernels,
///   couple_3de = false drops the eps t^3 transport feedback,
///   couple_zero = false drops the zero-mode forcing.
struct ToyParams {
    double eps = 1e-3;
    double c0 = 1.0;
    double nu = 1e-2;
    int alpha = 10;
    int k = 1;
    int kprime = 2;
    double eta = 100.0;
    int l = 0;

    bool couple_si = true;
    bool couple_3de = true;
    bool couple_zero = true;

    void validate() const;
    bool below_threshold() const { return eps <= c0 * nu; }
};

struct ToyState {
    double Q2k = 0.0, Q2kp = 0.0, Q3kp = 0.0, Q3k = 0.0, Q20 = 0.0, Q30 = 0.0;

    double max_component() const;
};

ToyState toy_rhs(const ToyState& s, double t, const ToyParams& p);

struct ToySample {
    double t = 0.0;
    ToyState state;
};

/// Fixed-step RK4; steps never straddle the kink of max(eps t, c0) at
/// t = c0/eps.
std::vector<ToySample> integrate_toy(const ToyParams& p, double t0, double t1,
                                     const ToyState& init, double dt = 1e-3);

/// exp of the integral of (1+|t-eta/k|)^{-1} across [eta/k - eta/k^2,
/// eta/k + eta/k^2]: equals (1 + eta/k^2)^2.
double interval_growth_ratio(double eta, int k);

/// log of prod_{k=1}^{sqrt(eta)} eta/k^2 = sqrt(eta) log(eta) - 2 log((sqrt eta)!).
double stirling_total_growth(double eta);

/// Smallest K with every component <= K * w(t, eta) along the trajectory.
double supersolution_constant(const std::vector<ToySample>& traj, double eta, double kappa);

}  // namespace couette
