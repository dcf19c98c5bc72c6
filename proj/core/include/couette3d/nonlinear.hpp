#pragma once

#include "couette3d/grid.hpp"

namespace couette {

/// Full nonlinear perturbation dynamics in the shearing frame X = x - t y:
///   d_t u + u . grad_L u = (-u2, 0, 0) - grad_L(pL + pNL) + nu Lap_L u
/// with Lap_L pL = -2 i k u2 and Lap_L pNL = -d_i^L u^j d_j^L u^i.
///
/// uhat.time is the frame time (time since the last remap); t is absolute.
/// They coincide until remap_shear is used.
struct SimState {
    SpectralVectorField uhat;
    double t = 0.0;
    double nu = 0.0;
    double eps_label = 0.0;   // nominal initial amplitude, metadata only
    bool linearized = false;  // drop quadratic terms (validation runs)

    SimState() = default;
    SimState(const GridSpec& g, double nu_) : uhat(g, Frame::Shear, 0.0), nu(nu_) {}
};

struct PressureFields {
    SpectralField pL_hat, pNL_hat;
};

struct QFields {
    SpectralField q1, q2, q3;
};

/// Both Poisson problems solved by division by -|k, eta - k t, l|^2;
/// zero shear-wavevector modes are set to 0.
PressureFields compute_pressure(const SimState& state);

/// Transport (divergence form, pseudospectral, dealiased) + pressure
/// gradients + lift-up; viscous term excluded (integrating factor in step).
/// The tendency satisfies kL . du/dt = k u2, which is exactly what the
/// time-dependent constraint kL(t) . u = 0 requires.
SpectralVectorField nonlinear_rhs(const SimState& state);

/// Lawson RK4 step with the exact per-mode viscous factor. Rejects dt on CFL
/// violation (max|u| dt N / L > 1); throws on NaN (numerical failure).
SimState step(const SimState& state, double dt);

/// Advance to t_end with uniform steps of size at most dt.
SimState advance(const SimState& state, double t_end, double dt);

/// Re-center the stored eta lattice: shift eta by k * t_frame so the stored
/// eta - k t becomes eta at frame time 0. Field values are unchanged as
/// functions; modes shifted outside the lattice are dropped. Requires
/// t_frame * Ly / (2 pi) to be an integer (lattice-commensurate).
SimState remap_shear(const SimState& state);

/// q^i = Lap_L u^i, i.e. multiplication by -|k, eta - k t, l|^2.
QFields q_fields(const SimState& state);

}  // namespace couette
