#pragma once

#include <array>
#include <vector>

#include "couette3d/grid.hpp"

namespace couette {

/// Auxiliary system for the sheared coordinate change: C tracks the
/// displacement, g = (U0^1 - C)/t its rate. U0^1 is co-evolved with the same
/// sampled inputs so the algebraic identity C = U0^1 - t g is preserved to
/// integration tolerance and can be used as a consistency oracle.
struct CoordState {
    Grid2 grid;
    Field2 C, g, u01;
    double time = 1.0;
    double nu = 0.0;

    CoordState() = default;
    explicit CoordState(const Grid2& gr, double nu_ = 0.0)
        : grid(gr), C(gr), g(gr), u01(gr), nu(nu_) {}
};

/// Pointwise rational factors of the coordinate Jacobian, physical space.
struct JacobianFactors {
    Grid2 grid;
    std::vector<double> psi_y, psi_z, G;
};

/// psi_y = dY C / (1 - dY C), psi_z = dZ C / (1 - dY C),
/// G = (1 + psi_y)^2 + psi_z^2 - 1. Requires ||dY C||_inf < 1/2.
JacobianFactors jacobians_from_C(const Field2& C);

/// One RK4 step of
///   dt C + (g, U0^3) . grad C = g - U0^2 + nu LapT C
///   dt g + (g, U0^3) . grad g = -2g/t - force_g/t + nu LapT g
///   dt U0^1 + (g, U0^3) . grad U0^1 = -U0^2 - force_g + nu LapT U0^1
/// with the variable-coefficient Laplacian
///   LapT F = (1 + G) dYY F + dZZ F + 2 psi_z dZY F.
/// Inputs are held fixed over the step. Requires time >= 1.
CoordState step_cg(const CoordState& state, const Field2& U02, const Field2& U03,
                   const Field2& force_g, double dt);

/// Integrate d(t psi)/dt = u0^1 - t u0^2 - (u0^2 dY + u0^3 dZ)(t psi)
/// + nu Lap(t psi) from the velocity history sampled at uniform dt starting
/// at t = 1; seeded with t psi(1) = int_0^1 u0^1 ds, approximated by the
/// lift-up backtrack u0^1(1) + u0^2(1)/2. Returns psi at each sample time.
std::vector<Field2> psi_from_history(const std::vector<std::array<Field2, 3>>& u0_series,
                                     double dt, double nu);

}  // namespace couette
