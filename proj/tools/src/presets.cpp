#include "presets.hpp"

#include <limits>

#include "spinchain/version.hpp"

namespace spinchain::cli {

namespace {

constexpr const char* k_sector_names[4] = {"uu", "ud", "du", "dd"};

RunConfig critical_bell() {
  RunConfig config;
  config.chain = {400, 1.0, 1.0, 0.0};
  config.coupling = {0.05, 0.0};
  config.coeffs = {1.0, -1.0, 1.0};
  config.grid = {20.0, 2000};
  return config;
}

RunConfig critical_mixed() {
  RunConfig config = critical_bell();
  config.coeffs = {1.0, -0.2, 0.2};
  return config;
}

std::vector<PresetSpec> build_specs() {
  std::vector<PresetSpec> specs;

  {
    PresetSpec spec;
    spec.name = "fig1";
    spec.description =
        "Bell start at the critical field: correlations over time and "
        "three-site strength";
    spec.kind = PresetSpec::Kind::alpha_sweep;
    spec.base = critical_bell();
    specs.push_back(spec);
  }
  {
    PresetSpec spec;
    spec.name = "fig2";
    spec.description =
        "Bell start without three-site coupling: trajectories for several "
        "transverse fields around the critical point";
    spec.kind = PresetSpec::Kind::value_sweep;
    spec.base = critical_bell();
    spec.sweep_name = "lambda";
    spec.sweep_values = {0.5, 0.9, 1.0, 1.1, 1.5};
    spec.notes.push_back(
        "stated parameter set lists alpha=0 without a field value while the "
        "companion discussion varies the field; this preset sweeps lambda at "
        "alpha=0");
    specs.push_back(spec);
  }
  {
    PresetSpec spec;
    spec.name = "fig3";
    spec.description =
        "zero-field oscillatory regime: trajectories for three three-site "
        "strengths";
    spec.kind = PresetSpec::Kind::value_sweep;
    spec.base = critical_bell();
    spec.base.chain.field = 0.0;
    spec.base.grid = {50.0, 5000};
    spec.sweep_name = "alpha";
    spec.sweep_values = {0.0, 0.1, 0.5};
    specs.push_back(spec);
  }
  {
    PresetSpec spec;
    spec.name = "fig4";
    spec.description =
        "mixed start at the critical field: correlations over time and "
        "three-site strength";
    spec.kind = PresetSpec::Kind::alpha_sweep;
    spec.base = critical_mixed();
    specs.push_back(spec);
  }
  {
    PresetSpec spec;
    spec.name = "fig5";
    spec.description =
        "mixed start, half-sided coupling: trajectories for four three-site "
        "strengths plus a companion anisotropy family";
    spec.kind = PresetSpec::Kind::value_sweep;
    spec.base = critical_mixed();
    spec.base.coupling.asymmetry = 0.5;
    spec.sweep_name = "alpha";
    spec.sweep_values = {-0.8, -0.5, 0.0, 0.5};
    spec.companion_name = "gamma";
    spec.companion_values = {0.25, 0.5, 1.0, 1.5};
    spec.notes.push_back(
        "stated parameter set repeats the transverse field twice and omits "
        "the anisotropy; anisotropy set to 1 for the alpha family");
    spec.notes.push_back(
        "the companion discussion varies the anisotropy, so a second table "
        "sweeps gamma at alpha=0");
    specs.push_back(spec);
  }
  {
    PresetSpec spec;
    spec.name = "fig6";
    spec.description =
        "one-sided coupling, mixed start: discord, classical and total "
        "correlation across the sudden transition";
    spec.kind = PresetSpec::Kind::series;
    spec.base = critical_mixed();
    spec.base.coupling.asymmetry = 1.0;
    specs.push_back(spec);
  }
  {
    PresetSpec spec;
    spec.name = "fig7";
    spec.description =
        "transition time against the three-site strength, one-sided "
        "coupling";
    spec.kind = PresetSpec::Kind::alpha_scan;
    spec.base = critical_mixed();
    spec.base.coupling.asymmetry = 1.0;
    spec.scan_lo = -1.0;
    spec.scan_hi = 1.0;
    spec.scan_points = 81;
    spec.notes.push_back(
        "chain size not stated for this data set; N=400 used like the other "
        "presets");
    specs.push_back(spec);
  }
  {
    PresetSpec spec;
    spec.name = "fig8";
    spec.description =
        "transition time against the anisotropy with a least-squares "
        "polynomial fit";
    spec.kind = PresetSpec::Kind::gamma_scan;
    spec.base = critical_mixed();
    spec.base.coupling.asymmetry = 1.0;
    spec.scan_lo = 0.2;
    spec.scan_hi = 1.2;
    spec.scan_points = 21;
    spec.fit_degree = 4;
    specs.push_back(spec);
  }
  return specs;
}

const std::vector<PresetSpec>& all_specs() {
  static const std::vector<PresetSpec> specs = build_specs();
  return specs;
}

nlohmann::ordered_json parameters_json(const RunConfig& config) {
  nlohmann::ordered_json params;
  params["n"] = config.chain.sites;
  params["lambda"] = config.chain.field;
  params["gamma"] = config.chain.anisotropy;
  params["alpha"] = config.chain.three_site;
  params["g"] = config.coupling.strength;
  params["delta"] = config.coupling.asymmetry;
  params["c1"] = config.coeffs.c1;
  params["c2"] = config.coeffs.c2;
  params["c3"] = config.coeffs.c3;
  params["t_max"] = config.grid.t_max;
  params["t_steps"] = config.grid.steps;
  return params;
}

nlohmann::ordered_json sector_flags(const std::array<bool, 4>& flags) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (int s = 0; s < 4; ++s) {
    if (flags[s]) {
      list.push_back(k_sector_names[s]);
    }
  }
  return list;
}

void merge_flags(std::array<bool, 4>& into, const std::array<bool, 4>& from) {
  for (int s = 0; s < 4; ++s) {
    into[s] = into[s] || from[s];
  }
}

std::vector<double> series_row(const TimeSeriesRow& row) {
  return {row.t,
          row.f14,
          row.f23,
          row.corr.mutual_info,
          row.corr.classical,
          row.corr.discord,
          row.corr.concurrence,
          row.corr.eof};
}

const std::vector<std::string>& series_columns() {
  static const std::vector<std::string> columns = {
      "t",       "f14",     "f23",         "mutual_info",
      "classical", "discord", "concurrence", "eof"};
  return columns;
}

Table value_sweep_table(const RunConfig& base, const std::string& name,
                        const std::vector<double>& values,
                        std::array<bool, 4>& flags) {
  Table table;
  table.columns.push_back(name);
  for (const std::string& column : series_columns()) {
    table.columns.push_back(column);
  }
  for (double value : values) {
    const TimeSeries series =
        time_series(apply_parameter(base, name, value));
    merge_flags(flags, series.negative_mode_energy);
    for (const TimeSeriesRow& row : series.rows) {
      std::vector<double> cells = series_row(row);
      cells.insert(cells.begin(), value);
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

std::array<bool, 4> scan_mode_flags(const RunConfig& base,
                                    const std::string& name, double lo,
                                    double hi, int points) {
  std::array<bool, 4> flags{};
  for (int i = 0; i < points; ++i) {
    const double value = lo + (hi - lo) * (static_cast<double>(i) / (points - 1));
    const RunConfig config = apply_parameter(base, name, value);
    merge_flags(flags,
                mode_table(config.chain, config.coupling).negative_mode_energy);
  }
  return flags;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const PresetSpec& spec : all_specs()) {
      out.push_back(spec.name);
    }
    return out;
  }();
  return names;
}

PresetSpec preset_spec(const std::string& name) {
  for (const PresetSpec& spec : all_specs()) {
    if (spec.name == name) {
      return spec;
    }
  }
  throw ConfigError("unknown preset: " + name);
}

RunConfig apply_parameter(RunConfig config, const std::string& name,
                          double value) {
  if (name == "lambda") {
    config.chain.field = value;
  } else if (name == "gamma") {
    config.chain.anisotropy = value;
  } else if (name == "alpha") {
    config.chain.three_site = value;
  } else {
    throw ConfigError("unknown sweep parameter: " + name);
  }
  return config;
}

Table series_table(const TimeSeries& series) {
  Table table;
  table.columns = series_columns();
  table.rows.reserve(series.rows.size());
  for (const TimeSeriesRow& row : series.rows) {
    table.rows.push_back(series_row(row));
  }
  return table;
}

PresetResult run_preset(const PresetSpec& spec,
                        const PresetOverrides& overrides) {
  PresetSpec preset = spec;
  if (overrides.t_max) {
    preset.base.grid.t_max = *overrides.t_max;
  }
  if (overrides.t_steps) {
    preset.base.grid.steps = *overrides.t_steps;
  }
  if (overrides.alpha_steps) {
    preset.alpha_steps = *overrides.alpha_steps;
    if (preset.kind == PresetSpec::Kind::alpha_scan) {
      preset.scan_points = *overrides.alpha_steps;
    }
  }
  if (overrides.gamma_steps &&
      preset.kind == PresetSpec::Kind::gamma_scan) {
    preset.scan_points = *overrides.gamma_steps;
  }
  if (overrides.fit_degree) {
    preset.fit_degree = *overrides.fit_degree;
  }

  PresetResult result;
  nlohmann::ordered_json& meta = result.metadata;
  meta["tool"] = "spinchain";
  meta["version"] = k_version;
  meta["preset"] = preset.name;
  meta["description"] = preset.description;
  meta["parameters"] = parameters_json(preset.base);

  std::array<bool, 4> negative_flags{};
  bool multiple_crossings = false;

  switch (preset.kind) {
    case PresetSpec::Kind::series: {
      const TimeSeries series = time_series(preset.base);
      merge_flags(negative_flags, series.negative_mode_energy);
      result.outputs.push_back({"", series_table(series)});
      break;
    }
    case PresetSpec::Kind::alpha_sweep: {
      const AlphaTimeSweep sweep = sweep_alpha_time(
          preset.base, preset.alpha_lo, preset.alpha_hi, preset.alpha_steps);
      merge_flags(negative_flags, sweep.negative_mode_energy);
      Table table;
      table.columns.push_back("alpha");
      for (const std::string& column : series_columns()) {
        table.columns.push_back(column);
      }
      table.rows.reserve(sweep.cells.size());
      for (std::size_t i = 0; i < sweep.alphas.size(); ++i) {
        for (std::size_t j = 0; j < sweep.times.size(); ++j) {
          std::vector<double> cells =
              series_row(sweep.cells[i * sweep.times.size() + j]);
          cells.insert(cells.begin(), sweep.alphas[i]);
          table.rows.push_back(std::move(cells));
        }
      }
      result.outputs.push_back({"", std::move(table)});
      meta["sweep"] = {{"parameter", "alpha"},
                       {"min", preset.alpha_lo},
                       {"max", preset.alpha_hi},
                       {"steps", preset.alpha_steps}};
      break;
    }
    case PresetSpec::Kind::value_sweep: {
      result.outputs.push_back(
          {"", value_sweep_table(preset.base, preset.sweep_name,
                                 preset.sweep_values, negative_flags)});
      meta["sweep"] = {{"parameter", preset.sweep_name},
                       {"values", preset.sweep_values}};
      if (!preset.companion_name.empty()) {
        result.outputs.push_back(
            {"_" + preset.companion_name,
             value_sweep_table(preset.base, preset.companion_name,
                               preset.companion_values, negative_flags)});
        meta["companion_sweep"] = {{"parameter", preset.companion_name},
                                   {"values", preset.companion_values}};
      }
      break;
    }
    case PresetSpec::Kind::alpha_scan: {
      const AlphaTransitionScan scan = transition_time_vs_alpha(
          preset.base, preset.scan_lo, preset.scan_hi, preset.scan_points);
      Table table;
      table.columns = {"alpha", "t_transition"};
      for (const ScanRow& row : scan.rows) {
        table.rows.push_back(
            {row.x, row.t_transition ? *row.t_transition
                                     : std::numeric_limits<double>::quiet_NaN()});
        multiple_crossings = multiple_crossings || row.multiple_crossings;
      }
      result.outputs.push_back({"", std::move(table)});
      meta["scan"] = {{"parameter", "alpha"},
                      {"min", preset.scan_lo},
                      {"max", preset.scan_hi},
                      {"points", preset.scan_points}};
      nlohmann::ordered_json results;
      if (scan.alpha_star) {
        results["alpha_star"] = *scan.alpha_star;
        results["t_at_alpha_star"] = *scan.t_star;
      } else {
        results["alpha_star"] = nullptr;
      }
      meta["results"] = results;
      merge_flags(negative_flags,
                  scan_mode_flags(preset.base, "alpha", preset.scan_lo,
                                  preset.scan_hi, preset.scan_points));
      break;
    }
    case PresetSpec::Kind::gamma_scan: {
      const GammaTransitionScan scan = transition_time_vs_gamma(
          preset.base, preset.scan_lo, preset.scan_hi, preset.scan_points,
          preset.fit_degree);
      Table table;
      table.columns = {"gamma", "t_transition"};
      for (const ScanRow& row : scan.rows) {
        table.rows.push_back(
            {row.x, row.t_transition ? *row.t_transition
                                     : std::numeric_limits<double>::quiet_NaN()});
        multiple_crossings = multiple_crossings || row.multiple_crossings;
      }
      result.outputs.push_back({"", std::move(table)});
      meta["scan"] = {{"parameter", "gamma"},
                      {"min", preset.scan_lo},
                      {"max", preset.scan_hi},
                      {"points", preset.scan_points},
                      {"fit_degree", preset.fit_degree}};
      nlohmann::ordered_json results;
      results["fit_coefficients"] = scan.fit;
      if (scan.fitted_minimum) {
        results["fitted_minimum"] = *scan.fitted_minimum;
      } else {
        results["fitted_minimum"] = nullptr;
      }
      meta["results"] = results;
      merge_flags(negative_flags,
                  scan_mode_flags(preset.base, "gamma", preset.scan_lo,
                                  preset.scan_hi, preset.scan_points));
      break;
    }
  }

  meta["flags"] = {{"negative_mode_energy", sector_flags(negative_flags)},
                   {"multiple_crossings", multiple_crossings}};
  if (!preset.notes.empty()) {
    meta["notes"] = preset.notes;
  }
  return result;
}

}  // namespace spinchain::cli
