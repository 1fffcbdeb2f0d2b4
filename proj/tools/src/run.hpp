#pragma once

#include <string>

#include "presets.hpp"

namespace spinchain::cli {

struct CliConfig {
  std::string subcommand;
  RunConfig run;
  double alpha_lo = -1.0;
  double alpha_hi = 1.0;
  int alpha_steps = 201;
  double gamma_lo = 0.2;
  double gamma_hi = 1.2;
  int gamma_steps = 21;
  int fit_degree = 4;
  std::string preset;
  PresetOverrides overrides;
  std::string out;  // empty = default ("-" for tables, <preset>.csv for presets)
  std::string format = "csv";
  std::string metadata_path;  // empty = only presets write a sidecar
};

// Executes the subcommand and returns the process exit code:
// 0 success, 2 configuration error, 3 physics-validity error, 4 i/o error.
int run(const CliConfig& config);

}  // namespace spinchain::cli
