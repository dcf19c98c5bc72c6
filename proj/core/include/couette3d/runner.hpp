#pragma once

#include "couette3d/config.hpp"

namespace couette {

/// Run the experiment described by the config and write its artifacts
/// (CSV time series, manifest.json, final checkpoint where applicable) into
/// cfg.output_dir. Throws ConfigError for bad inputs and std::runtime_error
/// for numerical failures.
void run(const ExperimentConfig& cfg);

}  // namespace couette
