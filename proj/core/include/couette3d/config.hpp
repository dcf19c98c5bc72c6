#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "couette3d/grid.hpp"

namespace couette {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key=value experiment description. Canonical fields are parsed and
/// validated eagerly; module-specific keys stay in the map and are read
/// through the typed getters.
struct ExperimentConfig {
    std::string kind;  // linear|streak|sim3d|toy|multiplier-table|coord
    int Nx = 64, Ny = 128, Nz = 64;
    double Ly = 4.0 * pi;
    double nu = 1e-3, eps = 1e-4, c0 = 1.0;
    std::uint64_t seed = 0;
    double t_end = 10.0, dt = 0.01, dt_out = 0.5;
    std::string output_dir = ".";
    std::map<std::string, std::string> extra;

    GridSpec grid() const { return GridSpec(Nx, Ny, Nz, Ly); }
    bool below_threshold() const { return eps <= c0 * nu; }

    double get_double(const std::string& key, double fallback) const;
    long get_long(const std::string& key, long fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

    /// Canonical "key=value\n" listing of every physical parameter, sorted.
    std::string canonical() const;
    /// FNV-1a hash of the canonical listing.
    std::uint64_t param_hash() const;

    void validate() const;  // throws ConfigError
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace couette
