#pragma once

#include <cstdint>

#include "couette3d/grid.hpp"

namespace couette {

/// Spectral envelope for random initial data.
struct Envelope {
    enum class Kind { Gevrey, Bandlimited } kind = Kind::Gevrey;
    double lambda_tilde = 0.5;  // Gevrey: exp(-lambda_tilde |k,eta,l|^s)
    double s = 0.5;
    double kappa0 = 4.0;  // Bandlimited: keep |k| + |eta| + |l| <= kappa0

    static Envelope gevrey(double lambda_tilde, double s) {
        return {Kind::Gevrey, lambda_tilde, s, 0.0};
    }
    static Envelope bandlimited(double kappa0) {
        return {Kind::Bandlimited, 0.0, 0.0, kappa0};
    }
};

/// Solenoidal Gaussian field: complex Gaussian modes shaped by the envelope,
/// Hermitian-symmetrized, Leray-projected at t = 0, mean mode zeroed,
/// L2-normalized to the requested amplitude. Deterministic in the seed.
SpectralVectorField random_initial_data(std::uint64_t seed, const GridSpec& grid,
                                        double amplitude, const Envelope& envelope);

/// Cascade-profile data: u1, u3 at the full amplitude, u2 suppressed to
/// roughly amplitude2 (per-mode construction keeps the field solenoidal).
/// The whole field is L2-normalized to amplitude.
SpectralVectorField random_cascade_data(std::uint64_t seed, const GridSpec& grid,
                                        double amplitude, double amplitude2,
                                        const Envelope& envelope);

}  // namespace couette
