#include <CLI11.hpp>

#include "run.hpp"
#include "spinchain/version.hpp"

namespace {

using spinchain::cli::CliConfig;

void add_io_options(CLI::App* cmd, CliConfig& config) {
  cmd->add_option("--out", config.out, "output path, - for stdout");
  cmd->add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--metadata", config.metadata_path,
                  "write a JSON metadata sidecar to this path");
}

void add_physics_options(CLI::App* cmd, CliConfig& config) {
  cmd->add_option("--n", config.run.chain.sites, "chain sites")
      ->check(CLI::Range(3, 1 << 24));
  cmd->add_option("--lambda", config.run.chain.field, "transverse field");
  cmd->add_option("--gamma", config.run.chain.anisotropy, "anisotropy");
  cmd->add_option("--alpha", config.run.chain.three_site,
                  "three-site interaction strength");
  cmd->add_option("--g", config.run.coupling.strength, "coupling strength")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--delta", config.run.coupling.asymmetry,
                  "coupling asymmetry")
      ->check(CLI::Range(-1.0, 1.0));
  cmd->add_option("--c1", config.run.coeffs.c1, "initial coefficient c1");
  cmd->add_option("--c2", config.run.coeffs.c2, "initial coefficient c2");
  cmd->add_option("--c3", config.run.coeffs.c3, "initial coefficient c3");
}

void add_grid_options(CLI::App* cmd, CliConfig& config) {
  cmd->add_option("--t-max", config.run.grid.t_max, "time window")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--t-steps", config.run.grid.steps, "time grid points")
      ->check(CLI::Range(2, 1 << 24));
}

void add_alpha_range(CLI::App* cmd, CliConfig& config) {
  cmd->add_option("--alpha-min", config.alpha_lo, "sweep lower bound");
  cmd->add_option("--alpha-max", config.alpha_hi, "sweep upper bound");
  cmd->add_option("--alpha-steps", config.alpha_steps, "sweep points")
      ->check(CLI::Range(2, 1 << 20));
}

void add_gamma_range(CLI::App* cmd, CliConfig& config) {
  cmd->add_option("--gamma-min", config.gamma_lo, "scan lower bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--gamma-max", config.gamma_hi, "scan upper bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--gamma-steps", config.gamma_steps, "scan points")
      ->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--fit-degree", config.fit_degree,
                  "polynomial degree of the least-squares fit")
      ->check(CLI::Range(1, 32));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinchain: two-qubit dephasing from an anisotropic XY chain with "
      "three-site interaction"};
  app.set_version_flag("--version", spinchain::k_version);
  app.require_subcommand(1);

  CliConfig config;
  config.run.chain = {400, 1.0, 1.0, 0.0};
  config.run.coupling = {0.05, 0.0};
  config.run.coeffs = {1.0, -1.0, 1.0};
  config.run.grid = {20.0, 2000};

  CLI::App* evolve = app.add_subcommand(
      "evolve", "trajectory of the overlap factors and all correlations");
  add_physics_options(evolve, config);
  add_grid_options(evolve, config);
  add_io_options(evolve, config);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "trajectories across a three-site strength range");
  add_physics_options(sweep, config);
  add_grid_options(sweep, config);
  add_alpha_range(sweep, config);
  add_io_options(sweep, config);

  CLI::App* events = app.add_subcommand(
      "events", "sudden-death and transition times for one configuration");
  add_physics_options(events, config);
  add_grid_options(events, config);
  add_io_options(events, config);

  CLI::App* alpha_scan = app.add_subcommand(
      "alpha-scan", "transition time across a three-site strength range");
  add_physics_options(alpha_scan, config);
  add_grid_options(alpha_scan, config);
  add_alpha_range(alpha_scan, config);
  add_io_options(alpha_scan, config);

  CLI::App* gamma_scan = app.add_subcommand(
      "gamma-scan",
      "transition time across an anisotropy range with a polynomial fit");
  add_physics_options(gamma_scan, config);
  add_grid_options(gamma_scan, config);
  add_gamma_range(gamma_scan, config);
  add_io_options(gamma_scan, config);

  CLI::App* preset = app.add_subcommand(
      "preset", "run a bundled parameter set (fig1..fig8)");
  preset->add_option("name", config.preset, "preset name")->required();
  preset->add_option("--t-max", config.overrides.t_max,
                     "override the time window");
  preset->add_option("--t-steps", config.overrides.t_steps,
                     "override the time grid points")
      ->check(CLI::Range(2, 1 << 24));
  preset->add_option("--alpha-steps", config.overrides.alpha_steps,
                     "override the sweep/scan resolution")
      ->check(CLI::Range(2, 1 << 20));
  preset->add_option("--gamma-steps", config.overrides.gamma_steps,
                     "override the scan resolution")
      ->check(CLI::Range(2, 1 << 20));
  preset->add_option("--fit-degree", config.overrides.fit_degree,
                     "override the fit degree")
      ->check(CLI::Range(1, 32));
  add_io_options(preset, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  return spinchain::cli::run(config);
}
