#pragma once

#include <array>

#include "couette3d/grid.hpp"

namespace couette {

/// One Fourier mode of the linearized shear-frame dynamics. uhat is the
/// velocity at the mode's current time; the divergence constraint
/// k u1 + (eta - k t) u2 + l u3 = 0 travels with the evolution.
struct LinearMode {
    int k = 0;
    double eta = 0.0;
    int l = 0;
    std::array<Complex, 3> uhat{};
    double nu = 0.0;

    double div_residual(double t) const;
};

/// Exact viscous decay of Q^2: the quadrature of nu |k, eta - k tau, l|^2.
Complex q2_closed_form(int k, double eta, int l, Complex q2_init, double t, double nu);

/// Solves Delta_L u2 = q2 at time t: returns -q2 / |k, eta - k t, l|^2.
Complex u2_from_q2(int k, double eta, int l, double t, Complex q2);

/// Q^2 = Delta_L u2 of the mode at time t.
Complex q2_of(const LinearMode& m, double t);

/// Lawson RK4 on du/dt = (-u2, 0, 0) - i kL p - nu |kL|^2 u with
/// p = 2 i k u2 / |kL|^2; the viscous factor is applied exactly.
/// dt <= 0 picks the default min(0.01, 0.1/(1+|eta|)).
LinearMode evolve_linear_mode(const LinearMode& mode, double t0, double t1, double dt = 0.0);

/// Reference decay envelopes: <t>^-2 e^{-c nu t^3} for component 2,
/// e^{-c nu t^3} for components 1 and 3. Requires c in (0, 1/3] and t >= 1.
double damping_envelope(int component, double t, double nu, double c);

}  // namespace couette
