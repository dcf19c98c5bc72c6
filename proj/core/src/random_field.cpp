#include "couette3d/random_field.hpp"

#include <cmath>
#include <random>

#include "couette3d/spectral_ops.hpp"

namespace couette {

SpectralVectorField random_initial_data(std::uint64_t seed, const GridSpec& grid,
                                        double amplitude, const Envelope& envelope) {
    SpectralVectorField u(grid, Frame::Shear, 0.0);
    if (amplitude == 0.0) return u;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int c = 0; c < 3; ++c)
        for (int ix = 0; ix < grid.Nx; ++ix) {
            const int k = grid.kx(ix);
            for (int iy = 0; iy < grid.Ny; ++iy) {
                const double eta = grid.eta(iy);
                for (int iz = 0; iz < grid.Nz; ++iz) {
                    const int l = grid.lz(iz);
                    if (k == 0 && eta == 0.0 && l == 0) continue;       // mean mode
                    if (!dealiased_band(grid, k, grid.meta(iy), l)) continue;
                    const double l1 = std::abs(k) + std::abs(eta) + std::abs(l);
                    double env = 0.0;
                    if (envelope.kind == Envelope::Kind::Gevrey)
                        env = std::exp(-envelope.lambda_tilde * std::pow(l1, envelope.s));
                    else if (l1 <= envelope.kappa0)
                        env = 1.0;
                    // draw unconditionally so the noise stream is independent
                    // of the envelope parameters
                    const Complex z{gauss(rng), gauss(rng)};
                    u.comp(c).at(ix, iy, iz) = env * z;
                }
            }
        }

    for (int c = 0; c < 3; ++c) enforce_hermitian(u.comp(c));
    leray_project(u);
    const double e = l2_norm_sq(u);
    if (e > 0.0) {
        const double scale = amplitude / std::sqrt(e);
        for (int c = 0; c < 3; ++c)
            for (auto& v : u.comp(c).c) v *= scale;
    }
    return u;
}

SpectralVectorField random_cascade_data(std::uint64_t seed, const GridSpec& grid,
                                        double amplitude, double amplitude2,
                                        const Envelope& envelope) {
    SpectralVectorField u(grid, Frame::Shear, 0.0);
    if (amplitude == 0.0) return u;
    const double rho = amplitude2 / amplitude;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int ix = 0; ix < grid.Nx; ++ix) {
        const int k = grid.kx(ix);
        for (int iy = 0; iy < grid.Ny; ++iy) {
            const double eta = grid.eta(iy);
            for (int iz = 0; iz < grid.Nz; ++iz) {
                const int l = grid.lz(iz);
                if (k == 0 && eta == 0.0 && l == 0) continue;
                if (!dealiased_band(grid, k, grid.meta(iy), l)) continue;
                const double l1 = std::abs(k) + std::abs(eta) + std::abs(l);
                double env = 0.0;
                if (envelope.kind == Envelope::Kind::Gevrey)
                    env = std::exp(-envelope.lambda_tilde * std::pow(l1, envelope.s));
                else if (l1 <= envelope.kappa0)
                    env = 1.0;
                const Complex z1{gauss(rng), gauss(rng)};
                const Complex z2{gauss(rng), gauss(rng)};
                const double kl2 = double(k) * k + double(l) * l;
                if (kl2 > 0.0) {
                    // u2 small; (u1, u3) cancel eta u2 plus a free component
                    // along (l, -k), which keeps k u1 + eta u2 + l u3 = 0
                    const Complex u2 = rho * z2 * env;
                    const Complex part = -eta * u2 / kl2;
                    const double hyp = std::sqrt(kl2);
                    u.u2.at(ix, iy, iz) = u2;
                    u.u1.at(ix, iy, iz) = part * double(k) + z1 * env * double(l) / hyp;
                    u.u3.at(ix, iy, iz) = part * double(l) - z1 * env * double(k) / hyp;
                } else {
                    // k = l = 0: divergence forces u2 = 0
                    u.u1.at(ix, iy, iz) = z1 * env;
                    u.u3.at(ix, iy, iz) = z2 * env;
                }
            }
        }
    }

    for (int c = 0; c < 3; ++c) enforce_hermitian(u.comp(c));
    leray_project(u);
    const double e = l2_norm_sq(u);
    if (e > 0.0) {
        const double scale = amplitude / std::sqrt(e);
        for (int c = 0; c < 3; ++c)
            for (auto& v : u.comp(c).c) v *= scale;
    }
    return u;
}

}  // namespace couette
