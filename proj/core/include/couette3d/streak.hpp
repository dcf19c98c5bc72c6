#pragma once

#include "couette3d/grid.hpp"

namespace couette {

/// x-independent "2.5D" flow: 2D Navier-Stokes for (u2, u3) in (y, z) plus
/// the forced scalar u1 obeying d_t u1 + (u2,u3).grad u1 = -u2 + nu Lap u1.
/// Fields are full 2D spectra with Hermitian symmetry (real in space) and
/// dy u2 + dz u3 = 0.
struct StreakState {
    Grid2 grid;
    Field2 u1, u2, u3;
    double time = 0.0;
    double nu = 0.0;

    StreakState() = default;
    explicit StreakState(const Grid2& g, double nu_ = 0.0)
        : grid(g), u1(g), u2(g), u3(g), nu(nu_) {}

    double div_residual() const;
};

/// One Lawson RK4 step with the exact heat integrating factor. The (u2, u3)
/// pair advances through its vorticity, so the divergence constraint is
/// enforced exactly. Rejects dt on CFL violation (max|u| dt N / L > 1).
StreakState step_streak(const StreakState& state, double dt);

/// Advance to t_end with uniform steps of size at most dt.
StreakState advance_streak(const StreakState& state, double t_end, double dt);

/// Heat-semigroup reference e^{nu t Lap}(u1_in - t u2_in) for the lift-up
/// growth of the streak component.
Field2 lift_up_reference(const StreakState& u_in, double t, double nu);

/// k = 0 slice of a 3D spectrum, rescaled to the 2D transform convention
/// so the state carries the physical x-average. Note the 3D norm of the
/// slice is 2 pi times the 2D norm of the result.
StreakState streak_from_3d(const SpectralVectorField& field, double nu = 0.0);

/// Embed as an x-independent 3D shear-frame field on an Nx-point x grid.
SpectralVectorField embed_streak(const StreakState& s, int Nx);

}  // namespace couette
