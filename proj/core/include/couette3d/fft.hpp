#pragma once

#include "couette3d/grid.hpp"

namespace couette {

// Fourier conventions: forward transform carries (2pi)^{-3/2} together with
// the volume element, so f_hat(k,eta,l) approximates
//   (2pi)^{-3/2} \int e^{-i(kx+eta y+lz)} f dV,
// and Parseval reads  \int |f|^2 dV = sum_{k,l} sum_eta |f_hat|^2 * deta.

/// f_hat <- transform of physical samples (real data stored as Complex).
void forward_transform(const GridSpec& g, const std::vector<Complex>& phys,
                       std::vector<Complex>& spec);
void inverse_transform(const GridSpec& g, const std::vector<Complex>& spec,
                       std::vector<Complex>& phys);

SpectralField forward_transform(const GridSpec& g, const std::vector<double>& phys);
std::vector<double> inverse_transform_real(const SpectralField& f);

// 2D analogues on (y,z); forward carries (2pi)^{-1} * dy dz.
void forward_transform2(const Grid2& g, const std::vector<Complex>& phys,
                        std::vector<Complex>& spec);
void inverse_transform2(const Grid2& g, const std::vector<Complex>& spec,
                        std::vector<Complex>& phys);

Field2 forward_transform2(const Grid2& g, const std::vector<double>& phys);
std::vector<double> inverse_transform2_real(const Field2& f);

}  // namespace couette
