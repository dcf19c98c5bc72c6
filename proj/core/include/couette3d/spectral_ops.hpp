#pragma once

#include <array>
#include <span>

#include "couette3d/grid.hpp"

namespace couette {

/// Deterministic pairwise-tree summation (fixed reduction order).
double pairwise_sum(std::span<const double> v);

/// Orthogonal projection of uhat onto the plane normal to kvec.
/// kvec = 0 returns the input unchanged.
std::array<Complex, 3> leray_project(const std::array<Complex, 3>& uhat,
                                     const ShearWavevector& kvec);

/// Project every mode of a shear-frame vector field (in place).
void leray_project(SpectralVectorField& u);

/// 2/3-rule truncation: zero modes with |k| > Nx/3, |m| > Ny/3, |l| > Nz/3.
void dealias(SpectralField& f);
void dealias(SpectralVectorField& u);
void dealias2(Field2& f);

bool dealiased_band(const GridSpec& g, int k, int m, int l);

/// max_modes |k uhat1 + (eta-kt) uhat2 + l uhat3| / ||u||
double divergence_residual(const SpectralVectorField& u);

/// Enforce uhat(-k,-m,-l) = conj(uhat(k,m,l)) by symmetrization.
void enforce_hermitian(SpectralField& f);
double hermitian_residual(const SpectralField& f);

/// L2(phys)^2 via Parseval: sum |f_hat|^2 * deta.
double l2_norm_sq(const SpectralField& f);
double l2_norm_sq(const SpectralVectorField& u);
double l2_norm_sq(const Field2& f);

}  // namespace couette
