#pragma once

#include <optional>
#include <vector>

#include "spinchain/correlations.hpp"
#include "spinchain/decoherence.hpp"

namespace spinchain {

// Uniform time grid on [0, t_max] including both endpoints.
struct TimeGrid {
  double t_max = 20.0;
  int steps = 2000;
};

struct RunConfig {
  ChainParams chain;
  CouplingParams coupling;
  BellDiagonalCoeffs coeffs;
  TimeGrid grid;
};

void validate(const RunConfig& config);

struct TimeSeriesRow {
  double t = 0.0;
  double f14 = 0.0;
  double f23 = 0.0;
  CorrelationReport corr;
};

struct TimeSeries {
  std::vector<TimeSeriesRow> rows;  // one per grid point, t ascending
  std::array<bool, 4> negative_mode_energy{};
};

// Full trajectory: both overlap factors plus every correlation measure at
// every grid point. Positivity errors propagate with the offending time.
TimeSeries time_series(const RunConfig& config);

// Row-major grid of trajectories over the three-site strength (alpha outer,
// time inner); deterministic ordering.
struct AlphaTimeSweep {
  std::vector<double> alphas;
  std::vector<double> times;
  std::vector<TimeSeriesRow> cells;  // alphas.size() * times.size()
  std::array<bool, 4> negative_mode_energy{};
};

AlphaTimeSweep sweep_alpha_time(const RunConfig& config, double alpha_lo,
                                double alpha_hi, int alpha_steps);

// A detected first-crossing event. All grid-detected crossings in the window
// are bisection-refined and listed; `time` is the first. In oscillatory
// regimes more than one crossing can occur, hence the flag.
struct EventReport {
  enum class Kind { sudden_death, transition };
  Kind kind = Kind::sudden_death;
  std::optional<double> time;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double tolerance = 0.0;  // bisection tolerance actually used
  std::vector<double> crossings;
  bool multiple_crossings = false;
};

// First time the concurrence reaches zero, refined by bisection on the
// signed quantity max((g_abs + c3 - 1)/2, (w_abs - c3 - 1)/2) to
// 1e-8 * t_max. Reports t = 0 when the concurrence starts at zero and no
// event when it never vanishes on the grid.
EventReport sudden_death_time(const RunConfig& config);

// First time the maximizer inside chi = max(|c3|, (w_abs + g_abs)/2)
// switches to |c3|, located by bisection on (w_abs + g_abs)/2 - |c3|.
// No event unless max(|c1|, |c2|) > |c3|.
EventReport transition_time(const RunConfig& config);

struct ScanRow {
  double x = 0.0;
  std::optional<double> t_transition;
  bool multiple_crossings = false;
};

// Transition time across a uniformly spaced three-site range, plus the
// golden-section-refined location of its maximum when it is interior.
struct AlphaTransitionScan {
  std::vector<ScanRow> rows;
  std::optional<double> alpha_star;
  std::optional<double> t_star;
};

AlphaTransitionScan transition_time_vs_alpha(const RunConfig& config,
                                             double alpha_lo, double alpha_hi,
                                             int points);

// Transition time across an anisotropy range with an ordinary least-squares
// polynomial fit; fitted_minimum is the fit's interior minimizer if any.
struct GammaTransitionScan {
  std::vector<ScanRow> rows;
  std::vector<double> fit;  // coefficients, ascending powers
  std::optional<double> fitted_minimum;
};

GammaTransitionScan transition_time_vs_gamma(const RunConfig& config,
                                             double gamma_lo, double gamma_hi,
                                             int points, int fit_degree = 4);

// Golden-section maximization of |F14|(alpha; t_ref) over a bracket, to
// |delta alpha| <= 1e-6. `boundary` marks a maximum pinned to the bracket
// edge; `degenerate` marks g = 0 where |F14| is identically 1.
struct OptimalAlpha {
  double alpha = 0.0;
  double f14 = 1.0;
  bool boundary = false;
  bool degenerate = false;
};

OptimalAlpha find_optimal_alpha(const RunConfig& config, double t_ref,
                                double alpha_lo, double alpha_hi);

// Ordinary least-squares polynomial fit; returns coefficients in ascending
// powers. Requires x.size() >= degree + 1.
std::vector<double> polynomial_fit(const std::vector<double>& x,
                                   const std::vector<double>& y, int degree);

double polynomial_eval(const std::vector<double>& coeffs, double x);

}  // namespace spinchain
