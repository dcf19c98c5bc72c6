#pragma once

#include <string>
#include <utility>
#include <vector>

#include "couette3d/grid.hpp"
#include "couette3d/nonlinear.hpp"

namespace couette {

/// Named (t, value) series with strictly increasing t and finite values.
struct TimeSeries {
    std::string name;
    std::vector<std::pair<double, double>> samples;

    void push(double t, double v);
};

struct ComponentEnergies {
    double E_total = 0.0;  // sum |u_hat|^2 deta over everything
    double E_neq = 0.0;    // x-dependent (k != 0) part
    double E0_1 = 0.0, E0_2 = 0.0, E0_3 = 0.0;  // k = 0 part per component
};

/// Parseval split by k = 0 vs k != 0 and by component.
ComponentEnergies component_energies(const SpectralVectorField& u);

/// ||<grad>^sigma f||_2 with weight <k, eta - k t_frame, l>^sigma. t_frame = 0
/// gives the shear-lattice weight; passing the frame time gives lab-frame
/// wavenumbers, whose eta - k t growth drives the cascade exponents.
double sobolev_norm(const SpectralField& f, double sigma, double t_frame = 0.0);

struct PowerLawFit {
    double exponent = 0.0;
    double r2 = 0.0;
};

/// Least-squares slope of log value vs log t over t in [t_lo, t_hi]. The
/// first 5 samples of the window are dropped to suppress transients.
/// Requires >= 8 samples in the window, all values positive.
PowerLawFit fit_power_law(const TimeSeries& series, double t_lo, double t_hi);

/// x-averaged quadratic form (U_neq . grad_L U^1_neq)_0 as a 2D spectral
/// field in the 2D transform convention (the gradient uses shear-frame
/// wavenumbers as an approximation of the coordinate-system gradient).
/// Feeds step_cg's force_g input, which applies the -1/t weight itself.
Field2 forcing_field(const SimState& state);

/// int u1 u2 dV (the lift-up energy flux) via Parseval.
double energy_flux(const SpectralVectorField& u);

/// ||grad_L u||^2 with shear-frame wavenumbers.
double gradient_norm_sq(const SpectralVectorField& u);

}  // namespace couette
