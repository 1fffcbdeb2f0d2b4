#include "spinchain/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "spinchain/optimize.hpp"

namespace spinchain {

namespace {

constexpr double k_alpha_tol = 1e-6;

std::vector<double> uniform_grid(double lo, double hi, int points) {
  std::vector<double> grid(points);
  const double span = hi - lo;
  for (int i = 0; i < points; ++i) {
    grid[i] = lo + span * (static_cast<double>(i) / (points - 1));
  }
  return grid;
}

DecoherenceEvaluator make_f14(const ChainParams& chain,
                              const CouplingParams& coupling) {
  return DecoherenceEvaluator({chain, coupling, Sector::uu, Sector::dd});
}

DecoherenceEvaluator make_f23(const ChainParams& chain,
                              const CouplingParams& coupling) {
  return DecoherenceEvaluator({chain, coupling, Sector::ud, Sector::du});
}

// Scan the time grid for sign changes of `signed_fn` from positive to
// nonpositive and refine each by bisection. `event_at_origin` controls what a
// nonpositive value at t = 0 means: an immediate event (sudden death of a
// state that starts unentangled) or no event at all.
EventReport detect_first_crossing(EventReport::Kind kind,
                                  const RunConfig& config,
                                  const std::function<double(double)>& signed_fn,
                                  bool event_at_origin) {
  EventReport report;
  report.kind = kind;
  report.tolerance = 1e-8 * config.grid.t_max;
  const std::vector<double> times =
      uniform_grid(0.0, config.grid.t_max, config.grid.steps);
  double previous = signed_fn(times.front());
  if (previous <= 0.0) {
    if (event_at_origin) {
      report.time = 0.0;
      report.crossings.push_back(0.0);
    }
    return report;
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double current = signed_fn(times[i]);
    if (previous > 0.0 && current <= 0.0) {
      const double crossing = bisect_down_crossing(signed_fn, times[i - 1],
                                                   times[i], report.tolerance);
      report.crossings.push_back(crossing);
      if (!report.time) {
        report.time = crossing;
        report.bracket_lo = times[i - 1];
        report.bracket_hi = times[i];
      }
    }
    previous = current;
  }
  report.multiple_crossings = report.crossings.size() > 1;
  return report;
}

}  // namespace

void validate(const RunConfig& config) {
  validate(config.chain);
  validate(config.coupling);
  validate(config.coeffs);
  if (!(config.grid.t_max > 0.0)) {
    throw ConfigError("t_max must be positive");
  }
  if (config.grid.steps < 2) {
    throw ConfigError("time grid needs at least 2 steps");
  }
}

TimeSeries time_series(const RunConfig& config) {
  validate(config);
  const DecoherenceEvaluator f14 = make_f14(config.chain, config.coupling);
  const DecoherenceEvaluator f23 = make_f23(config.chain, config.coupling);
  TimeSeries series;
  series.negative_mode_energy = f14.negative_mode_energy();
  series.rows.reserve(config.grid.steps);
  for (double t : uniform_grid(0.0, config.grid.t_max, config.grid.steps)) {
    TimeSeriesRow row;
    row.t = t;
    row.f14 = f14(t);
    row.f23 = f23(t);
    const XState state = evolve_state(config.coeffs, row.f14, row.f23);
    try {
      row.corr = correlation_report(state);
    } catch (const PositivityError& err) {
      throw PositivityError(std::string(err.what()) + " at t=" +
                            std::to_string(t));
    }
    series.rows.push_back(row);
  }
  return series;
}

AlphaTimeSweep sweep_alpha_time(const RunConfig& config, double alpha_lo,
                                double alpha_hi, int alpha_steps) {
  validate(config);
  if (!std::isfinite(alpha_lo) || !std::isfinite(alpha_hi) ||
      !(alpha_lo < alpha_hi)) {
    throw ConfigError("alpha range must be finite and increasing");
  }
  if (alpha_steps < 2) {
    throw ConfigError("alpha sweep needs at least 2 steps");
  }
  AlphaTimeSweep sweep;
  sweep.alphas = uniform_grid(alpha_lo, alpha_hi, alpha_steps);
  sweep.times = uniform_grid(0.0, config.grid.t_max, config.grid.steps);
  sweep.cells.reserve(sweep.alphas.size() * sweep.times.size());
  for (double alpha : sweep.alphas) {
    RunConfig point = config;
    point.chain.three_site = alpha;
    TimeSeries series = time_series(point);
    for (int s = 0; s < 4; ++s) {
      if (series.negative_mode_energy[s]) {
        sweep.negative_mode_energy[s] = true;
      }
    }
    sweep.cells.insert(sweep.cells.end(), series.rows.begin(),
                       series.rows.end());
  }
  return sweep;
}

EventReport sudden_death_time(const RunConfig& config) {
  validate(config);
  const DecoherenceEvaluator f14 = make_f14(config.chain, config.coupling);
  const DecoherenceEvaluator f23 = make_f23(config.chain, config.coupling);
  const auto signed_concurrence = [&](double t) {
    const XState state = evolve_state(config.coeffs, f14(t), f23(t));
    return std::max(0.5 * (state.g_abs + state.c3 - 1.0),
                    0.5 * (state.w_abs - state.c3 - 1.0));
  };
  return detect_first_crossing(EventReport::Kind::sudden_death, config,
                               signed_concurrence, /*event_at_origin=*/true);
}

EventReport transition_time(const RunConfig& config) {
  validate(config);
  const double off_weight =
      std::max(std::abs(config.coeffs.c1), std::abs(config.coeffs.c2));
  const double c3_abs = std::abs(config.coeffs.c3);
  if (!(off_weight > c3_abs)) {
    // chi = |c3| from t = 0: no transition exists
    EventReport report;
    report.kind = EventReport::Kind::transition;
    report.tolerance = 1e-8 * config.grid.t_max;
    return report;
  }
  const DecoherenceEvaluator f14 = make_f14(config.chain, config.coupling);
  const DecoherenceEvaluator f23 = make_f23(config.chain, config.coupling);
  const auto coherence_excess = [&](double t) {
    const XState state = evolve_state(config.coeffs, f14(t), f23(t));
    return 0.5 * (state.w_abs + state.g_abs) - c3_abs;
  };
  return detect_first_crossing(EventReport::Kind::transition, config,
                               coherence_excess, /*event_at_origin=*/false);
}

AlphaTransitionScan transition_time_vs_alpha(const RunConfig& config,
                                             double alpha_lo, double alpha_hi,
                                             int points) {
  validate(config);
  if (!(alpha_lo < alpha_hi) || points < 2) {
    throw ConfigError("alpha scan needs an increasing range and >= 2 points");
  }
  const auto transition_report = [&](double alpha) {
    RunConfig point = config;
    point.chain.three_site = alpha;
    return transition_time(point);
  };
  const auto transition_at = [&](double alpha) -> std::optional<double> {
    return transition_report(alpha).time;
  };
  AlphaTransitionScan scan;
  scan.rows.reserve(points);
  for (double alpha : uniform_grid(alpha_lo, alpha_hi, points)) {
    const EventReport report = transition_report(alpha);
    scan.rows.push_back({alpha, report.time, report.multiple_crossings});
  }

  std::size_t best = scan.rows.size();
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    if (scan.rows[i].t_transition &&
        (best == scan.rows.size() ||
         *scan.rows[i].t_transition > *scan.rows[best].t_transition)) {
      best = i;
    }
  }
  if (best == scan.rows.size()) {
    return scan;  // no transition anywhere on the grid
  }
  if (best == 0 || best + 1 == scan.rows.size()) {
    scan.alpha_star = scan.rows[best].x;  // pinned to the scan boundary
    scan.t_star = scan.rows[best].t_transition;
    return scan;
  }
  const auto value = [&](double alpha) {
    const std::optional<double> t = transition_at(alpha);
    return t ? *t : -1.0;  // absent rows never win; t' is positive
  };
  const double refined = golden_section_max(
      value, scan.rows[best - 1].x, scan.rows[best + 1].x, k_alpha_tol);
  scan.alpha_star = refined;
  scan.t_star = transition_at(refined);
  return scan;
}

GammaTransitionScan transition_time_vs_gamma(const RunConfig& config,
                                             double gamma_lo, double gamma_hi,
                                             int points, int fit_degree) {
  validate(config);
  if (!(gamma_lo > 0.0) || !(gamma_hi > gamma_lo)) {
    throw ConfigError("gamma scan needs a positive increasing range");
  }
  if (points < 2) {
    throw ConfigError("gamma scan needs at least 2 points");
  }
  if (fit_degree < 1) {
    throw ConfigError("fit degree must be >= 1");
  }
  if (points < fit_degree + 1) {
    throw ConfigError("gamma scan needs at least fit_degree + 1 points");
  }
  GammaTransitionScan scan;
  scan.rows.reserve(points);
  for (double gamma : uniform_grid(gamma_lo, gamma_hi, points)) {
    RunConfig point = config;
    point.chain.anisotropy = gamma;
    const EventReport report = transition_time(point);
    scan.rows.push_back({gamma, report.time, report.multiple_crossings});
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (const ScanRow& row : scan.rows) {
    if (row.t_transition) {
      xs.push_back(row.x);
      ys.push_back(*row.t_transition);
    }
  }
  if (static_cast<int>(xs.size()) < fit_degree + 1) {
    throw ConfigError("too few transitions found for the requested fit "
                      "degree");
  }
  scan.fit = polynomial_fit(xs, ys, fit_degree);

  // locate the fit's interior minimum: dense sampling, then golden section
  const int samples = 4096;
  const std::vector<double> grid = uniform_grid(gamma_lo, gamma_hi, samples);
  std::size_t arg_min = 0;
  double min_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double value = polynomial_eval(scan.fit, grid[i]);
    if (value < min_value) {
      min_value = value;
      arg_min = i;
    }
  }
  if (arg_min > 0 && arg_min + 1 < grid.size()) {
    const auto neg_fit = [&](double x) {
      return -polynomial_eval(scan.fit, x);
    };
    scan.fitted_minimum = golden_section_max(neg_fit, grid[arg_min - 1],
                                             grid[arg_min + 1], 1e-9);
  }
  return scan;
}

OptimalAlpha find_optimal_alpha(const RunConfig& config, double t_ref,
                                double alpha_lo, double alpha_hi) {
  validate(config);
  if (!(t_ref >= 0.0)) {
    throw ConfigError("reference time must be >= 0");
  }
  if (!(alpha_lo < alpha_hi)) {
    throw ConfigError("alpha bracket must be increasing");
  }
  OptimalAlpha result;
  if (config.coupling.strength == 0.0) {
    // |F14| is identically 1; no meaningful maximum
    result.alpha = 0.5 * (alpha_lo + alpha_hi);
    result.f14 = 1.0;
    result.degenerate = true;
    return result;
  }
  const auto f14_at = [&](double alpha) {
    ChainParams chain = config.chain;
    chain.three_site = alpha;
    return make_f14(chain, config.coupling)(t_ref);
  };
  result.alpha = golden_section_max(f14_at, alpha_lo, alpha_hi, k_alpha_tol);
  result.f14 = f14_at(result.alpha);
  const double margin = 3.0 * k_alpha_tol;
  result.boundary =
      result.alpha - alpha_lo < margin || alpha_hi - result.alpha < margin;
  return result;
}

std::vector<double> polynomial_fit(const std::vector<double>& x,
                                   const std::vector<double>& y, int degree) {
  if (degree < 0 || x.size() != y.size() ||
      static_cast<int>(x.size()) < degree + 1) {
    throw ConfigError("polynomial fit needs degree >= 0 and > degree points");
  }
  Eigen::MatrixXd vandermonde(x.size(), degree + 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double power = 1.0;
    for (int j = 0; j <= degree; ++j) {
      vandermonde(i, j) = power;
      power *= x[i];
    }
  }
  Eigen::Map<const Eigen::VectorXd> rhs(y.data(), y.size());
  const Eigen::VectorXd solution =
      vandermonde.colPivHouseholderQr().solve(rhs);
  return {solution.data(), solution.data() + solution.size()};
}

double polynomial_eval(const std::vector<double>& coeffs, double x) {
  double value = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

}  // namespace spinchain
