#pragma once

#include <string>
#include <vector>

#include "couette3d/config.hpp"
#include "couette3d/nonlinear.hpp"

namespace couette {

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary checkpoint: magic "CUET3D01", little-endian u64 Nx, Ny, Nz,
/// f64 Ly, t, nu, then three complex128 arrays (re, im interleaved) in
/// (k-major, eta, l) half-spectrum order, k = 0..Nx/2. The dropped modes are
/// reconstructed from Hermitian symmetry, so the round trip is bit-exact for
/// real-valued fields.
void write_checkpoint(const SimState& state, const std::string& path);
SimState read_checkpoint(const std::string& path);

/// CSV with a fixed header; rows written with 17 significant digits so
/// identical runs produce byte-identical files.
void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

/// manifest.json with the kind, the canonical parameters, and their hash.
void write_manifest(const ExperimentConfig& cfg, const std::string& path);

}  // namespace couette
