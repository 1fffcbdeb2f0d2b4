#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinchain/analysis.hpp"
#include "table.hpp"

namespace spinchain::cli {

// A bundled experiment: fixed physics parameters plus the sweep or scan that
// produces one of the reference data sets fig1..fig8.
struct PresetSpec {
  enum class Kind { series, alpha_sweep, value_sweep, alpha_scan, gamma_scan };

  std::string name;
  std::string description;
  Kind kind = Kind::series;
  RunConfig base;

  // alpha_sweep
  double alpha_lo = -1.0;
  double alpha_hi = 1.0;
  int alpha_steps = 201;

  // value_sweep: a family of trajectories over a named chain parameter
  std::string sweep_name;
  std::vector<double> sweep_values;
  // optional companion family written to a second file
  std::string companion_name;
  std::vector<double> companion_values;

  // alpha_scan / gamma_scan
  double scan_lo = 0.0;
  double scan_hi = 0.0;
  int scan_points = 0;
  int fit_degree = 4;

  std::vector<std::string> notes;  // parameter ambiguities, recorded verbatim
};

// Grid-resolution knobs a user may override; the physics parameters of a
// preset are fixed.
struct PresetOverrides {
  std::optional<double> t_max;
  std::optional<int> t_steps;
  std::optional<int> alpha_steps;
  std::optional<int> gamma_steps;
  std::optional<int> fit_degree;
};

struct PresetOutput {
  std::string suffix;  // "" for the main table
  Table table;
};

struct PresetResult {
  std::vector<PresetOutput> outputs;
  nlohmann::ordered_json metadata;
};

const std::vector<std::string>& preset_names();
PresetSpec preset_spec(const std::string& name);  // ConfigError if unknown
PresetResult run_preset(const PresetSpec& spec,
                        const PresetOverrides& overrides = {});

// Returns `config` with the named chain parameter ("lambda", "gamma" or
// "alpha") replaced; used by value sweeps and by the validity checks.
RunConfig apply_parameter(RunConfig config, const std::string& name,
                          double value);

// Columns of a trajectory table, shared by every emitter.
Table series_table(const TimeSeries& series);

}  // namespace spinchain::cli
