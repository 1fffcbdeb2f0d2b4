#include "run.hpp"

#include <iostream>
#include <limits>

#include "spinchain/version.hpp"

namespace spinchain::cli {

namespace {

constexpr double k_nan = std::numeric_limits<double>::quiet_NaN();

std::string sidecar_path(const std::string& out, const std::string& fallback) {
  if (out == "-" || out.empty()) {
    return fallback + ".meta.json";
  }
  const std::size_t dot = out.find_last_of('.');
  const std::size_t slash = out.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return out.substr(0, dot) + ".meta.json";
  }
  return out + ".meta.json";
}

std::string with_suffix(const std::string& out, const std::string& suffix,
                        const std::string& fallback) {
  if (suffix.empty()) {
    return out;
  }
  if (out == "-" || out.empty()) {
    return fallback + suffix + ".csv";
  }
  const std::size_t dot = out.find_last_of('.');
  const std::size_t slash = out.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return out.substr(0, dot) + suffix + out.substr(dot);
  }
  return out + suffix;
}

nlohmann::ordered_json base_metadata(const CliConfig& config) {
  nlohmann::ordered_json meta;
  meta["tool"] = "spinchain";
  meta["version"] = k_version;
  meta["subcommand"] = config.subcommand;
  nlohmann::ordered_json params;
  params["n"] = config.run.chain.sites;
  params["lambda"] = config.run.chain.field;
  params["gamma"] = config.run.chain.anisotropy;
  params["alpha"] = config.run.chain.three_site;
  params["g"] = config.run.coupling.strength;
  params["delta"] = config.run.coupling.asymmetry;
  params["c1"] = config.run.coeffs.c1;
  params["c2"] = config.run.coeffs.c2;
  params["c3"] = config.run.coeffs.c3;
  params["t_max"] = config.run.grid.t_max;
  params["t_steps"] = config.run.grid.steps;
  meta["parameters"] = params;
  return meta;
}

nlohmann::ordered_json sector_flags(const std::array<bool, 4>& flags) {
  static constexpr const char* names[4] = {"uu", "ud", "du", "dd"};
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (int s = 0; s < 4; ++s) {
    if (flags[s]) {
      list.push_back(names[s]);
    }
  }
  return list;
}

nlohmann::ordered_json event_json(const EventReport& report) {
  nlohmann::ordered_json doc;
  if (report.time) {
    doc["t_event"] = *report.time;
  } else {
    doc["t_event"] = nullptr;
  }
  doc["tolerance"] = report.tolerance;
  doc["multiple_crossings"] = report.multiple_crossings;
  doc["crossings"] = report.crossings;
  return doc;
}

void append_event_row(Table& table, const char* label,
                      const EventReport& report) {
  table.labels.push_back(label);
  table.rows.push_back({report.time ? *report.time : k_nan, report.bracket_lo,
                        report.bracket_hi, report.tolerance,
                        report.multiple_crossings ? 1.0 : 0.0,
                        static_cast<double>(report.crossings.size())});
}

int run_impl(const CliConfig& config) {
  const std::string out = config.out.empty() ? "-" : config.out;

  if (config.subcommand == "preset") {
    const PresetSpec spec = preset_spec(config.preset);
    PresetResult result = run_preset(spec, config.overrides);
    const std::string main_out =
        config.out.empty() ? spec.name + ".csv" : config.out;
    nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
    for (const PresetOutput& output : result.outputs) {
      const std::string path =
          with_suffix(main_out, output.suffix, spec.name);
      write_table(output.table, path, config.format);
      outputs.push_back(path == "-" ? "(stdout)" : path);
    }
    result.metadata["outputs"] = outputs;
    const std::string meta_path = config.metadata_path.empty()
                                      ? sidecar_path(main_out, spec.name)
                                      : config.metadata_path;
    write_text_file(meta_path, result.metadata.dump(2) + "\n");
    return 0;
  }

  Table table;
  nlohmann::ordered_json meta = base_metadata(config);

  if (config.subcommand == "evolve") {
    const TimeSeries series = time_series(config.run);
    table = series_table(series);
    meta["flags"] = {
        {"negative_mode_energy", sector_flags(series.negative_mode_energy)}};
  } else if (config.subcommand == "sweep") {
    const AlphaTimeSweep sweep = sweep_alpha_time(
        config.run, config.alpha_lo, config.alpha_hi, config.alpha_steps);
    table = series_table(TimeSeries{});
    table.columns.insert(table.columns.begin(), "alpha");
    for (std::size_t i = 0; i < sweep.alphas.size(); ++i) {
      for (std::size_t j = 0; j < sweep.times.size(); ++j) {
        const TimeSeriesRow& row = sweep.cells[i * sweep.times.size() + j];
        table.rows.push_back({sweep.alphas[i], row.t, row.f14, row.f23,
                              row.corr.mutual_info, row.corr.classical,
                              row.corr.discord, row.corr.concurrence,
                              row.corr.eof});
      }
    }
    meta["sweep"] = {{"parameter", "alpha"},
                     {"min", config.alpha_lo},
                     {"max", config.alpha_hi},
                     {"steps", config.alpha_steps}};
    meta["flags"] = {
        {"negative_mode_energy", sector_flags(sweep.negative_mode_energy)}};
  } else if (config.subcommand == "events") {
    const EventReport death = sudden_death_time(config.run);
    const EventReport transition = transition_time(config.run);
    table.label_column = "kind";
    table.columns = {"t_event",   "bracket_lo",         "bracket_hi",
                     "tolerance", "multiple_crossings", "n_crossings"};
    append_event_row(table, "sudden_death", death);
    append_event_row(table, "transition", transition);
    meta["results"] = {{"sudden_death", event_json(death)},
                       {"transition", event_json(transition)}};
    meta["flags"] = {{"multiple_crossings", death.multiple_crossings ||
                                                transition.multiple_crossings}};
  } else if (config.subcommand == "alpha-scan") {
    const AlphaTransitionScan scan = transition_time_vs_alpha(
        config.run, config.alpha_lo, config.alpha_hi, config.alpha_steps);
    table.columns = {"alpha", "t_transition"};
    bool multi = false;
    for (const ScanRow& row : scan.rows) {
      table.rows.push_back(
          {row.x, row.t_transition ? *row.t_transition : k_nan});
      multi = multi || row.multiple_crossings;
    }
    nlohmann::ordered_json results;
    if (scan.alpha_star) {
      results["alpha_star"] = *scan.alpha_star;
      results["t_at_alpha_star"] = *scan.t_star;
    } else {
      results["alpha_star"] = nullptr;
    }
    meta["results"] = results;
    meta["flags"] = {{"multiple_crossings", multi}};
  } else if (config.subcommand == "gamma-scan") {
    const GammaTransitionScan scan = transition_time_vs_gamma(
        config.run, config.gamma_lo, config.gamma_hi, config.gamma_steps,
        config.fit_degree);
    table.columns = {"gamma", "t_transition"};
    bool multi = false;
    for (const ScanRow& row : scan.rows) {
      table.rows.push_back(
          {row.x, row.t_transition ? *row.t_transition : k_nan});
      multi = multi || row.multiple_crossings;
    }
    nlohmann::ordered_json results;
    results["fit_coefficients"] = scan.fit;
    if (scan.fitted_minimum) {
      results["fitted_minimum"] = *scan.fitted_minimum;
    } else {
      results["fitted_minimum"] = nullptr;
    }
    meta["results"] = results;
    meta["flags"] = {{"multiple_crossings", multi}};
  } else {
    throw ConfigError("unknown subcommand: " + config.subcommand);
  }

  write_table(table, out, config.format);
  if (!config.metadata_path.empty()) {
    write_text_file(config.metadata_path, meta.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int run(const CliConfig& config) {
  try {
    return run_impl(config);
  } catch (const ConfigError& err) {
    std::cerr << "configuration error: " << err.what() << '\n';
    return 2;
  } catch (const PhysicsError& err) {
    std::cerr << "physics validity error: " << err.what() << '\n';
    return 3;
  } catch (const IoError& err) {
    std::cerr << "i/o error: " << err.what() << '\n';
    return 4;
  }
}

}  // namespace spinchain::cli
