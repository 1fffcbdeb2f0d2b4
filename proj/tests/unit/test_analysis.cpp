#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spinchain/analysis.hpp"
#include "spinchain/optimize.hpp"

using namespace spinchain;

namespace {

RunConfig bell_critical() {
  // N=400 critical chain, symmetric weak coupling, Bell initial state
  RunConfig config;
  config.chain = {400, 1.0, 1.0, 0.0};
  config.coupling = {0.05, 0.0};
  config.coeffs = {1.0, -1.0, 1.0};
  config.grid = {20.0, 2000};
  return config;
}

RunConfig mixed_one_sided() {
  // the sudden-transition setup: one qubit decoupled, mixed initial state
  RunConfig config = bell_critical();
  config.coupling = {0.05, 1.0};
  config.coeffs = {1.0, -0.2, 0.2};
  return config;
}

}  // namespace

TEST_CASE("run config validation") {
  RunConfig config = bell_critical();
  CHECK_NOTHROW(validate(config));
  config.grid.steps = 1;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config = bell_critical();
  config.grid.t_max = 0.0;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config = bell_critical();
  config.coeffs = {1.0, 1.0, 1.0};
  CHECK_THROWS_AS(validate(config), PositivityError);
}

TEST_CASE("time series basics") {
  RunConfig config = bell_critical();
  config.grid = {10.0, 101};
  const TimeSeries series = time_series(config);
  REQUIRE(series.rows.size() == 101);
  CHECK(series.rows.front().t == 0.0);
  CHECK(series.rows.back().t == 10.0);
  for (std::size_t i = 1; i < series.rows.size(); ++i) {
    CHECK(series.rows[i].t > series.rows[i - 1].t);
  }
  SUBCASE("undecohered Bell row") {
    const TimeSeriesRow& first = series.rows.front();
    CHECK(first.f14 == 1.0);
    CHECK(first.f23 == 1.0);
    CHECK(first.corr.mutual_info == 2.0);
    CHECK(first.corr.classical == 1.0);
    CHECK(first.corr.discord == 1.0);
    CHECK(first.corr.concurrence == 1.0);
    CHECK(first.corr.eof == 1.0);
  }
  SUBCASE("coherences shrink whenever the factors do") {
    const BellDiagonalCoeffs coeffs = config.coeffs;
    for (std::size_t i = 1; i < series.rows.size(); ++i) {
      if (series.rows[i].f14 <= series.rows[i - 1].f14) {
        const XState now =
            evolve_state(coeffs, series.rows[i].f14, series.rows[i].f23);
        const XState before = evolve_state(coeffs, series.rows[i - 1].f14,
                                           series.rows[i - 1].f23);
        CHECK(now.g_abs <= before.g_abs);
      }
    }
  }
}

TEST_CASE("critical-point correlations die off and stay down") {
  // Bell start at the critical field: discord and EOF drop below 0.01
  // inside the window and never recover
  const TimeSeries series = time_series(bell_critical());
  std::size_t first_low = series.rows.size();
  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    if (series.rows[i].corr.discord < 0.01 && series.rows[i].corr.eof < 0.01) {
      first_low = i;
      break;
    }
  }
  REQUIRE(first_low < series.rows.size());
  for (std::size_t i = first_low; i < series.rows.size(); ++i) {
    CHECK(series.rows[i].corr.discord < 0.01);
    CHECK(series.rows[i].corr.eof < 0.01);
  }
}

TEST_CASE("decoupled runs are flat") {
  RunConfig config = bell_critical();
  config.coupling.strength = 0.0;
  config.grid = {5.0, 64};
  const TimeSeries series = time_series(config);
  for (const TimeSeriesRow& row : series.rows) {
    CHECK(row.f14 == 1.0);
    CHECK(row.f23 == 1.0);
    CHECK(row.corr.discord == series.rows.front().corr.discord);
    CHECK(row.corr.eof == series.rows.front().corr.eof);
  }
}

TEST_CASE("alpha sweep layout") {
  RunConfig config = bell_critical();
  config.chain.sites = 101;
  config.grid = {5.0, 21};
  const AlphaTimeSweep sweep = sweep_alpha_time(config, -0.5, 0.5, 5);
  REQUIRE(sweep.alphas.size() == 5);
  REQUIRE(sweep.times.size() == 21);
  REQUIRE(sweep.cells.size() == 105);
  CHECK(sweep.alphas.front() == -0.5);
  CHECK(sweep.alphas.back() == 0.5);
  // alpha-major ordering: cell (i, j) carries times[j]
  for (std::size_t i = 0; i < sweep.alphas.size(); ++i) {
    for (std::size_t j = 0; j < sweep.times.size(); ++j) {
      CHECK(sweep.cells[i * sweep.times.size() + j].t == sweep.times[j]);
    }
  }
  SUBCASE("zero coupling is alpha independent") {
    config.coupling.strength = 0.0;
    const AlphaTimeSweep flat = sweep_alpha_time(config, -0.5, 0.5, 5);
    for (std::size_t j = 0; j < flat.times.size(); ++j) {
      for (std::size_t i = 1; i < flat.alphas.size(); ++i) {
        CHECK(flat.cells[i * flat.times.size() + j].corr.discord ==
              flat.cells[j].corr.discord);
      }
    }
  }
  SUBCASE("range validation") {
    CHECK_THROWS_AS(sweep_alpha_time(config, 0.5, -0.5, 5), ConfigError);
    CHECK_THROWS_AS(sweep_alpha_time(config, -0.5, 0.5, 1), ConfigError);
  }
}

TEST_CASE("sweep results are reproducible") {
  RunConfig config = bell_critical();
  config.chain.sites = 101;
  config.grid = {5.0, 11};
  const AlphaTimeSweep first = sweep_alpha_time(config, -1.0, 1.0, 7);
  const AlphaTimeSweep second = sweep_alpha_time(config, -1.0, 1.0, 7);
  REQUIRE(first.cells.size() == second.cells.size());
  for (std::size_t i = 0; i < first.cells.size(); ++i) {
    CHECK(first.cells[i].f14 == second.cells[i].f14);
    CHECK(first.cells[i].corr.discord == second.cells[i].corr.discord);
  }
}

TEST_CASE("sudden death detection") {
  SUBCASE("no event for a flat Bell state") {
    RunConfig config = bell_critical();
    config.coupling.strength = 0.0;
    config.grid.steps = 100;
    const EventReport report = sudden_death_time(config);
    CHECK(report.kind == EventReport::Kind::sudden_death);
    CHECK_FALSE(report.time.has_value());
  }
  SUBCASE("mixed state at criticality dies in finite time") {
    RunConfig config = bell_critical();
    config.coeffs = {1.0, -0.2, 0.2};
    const EventReport report = sudden_death_time(config);
    REQUIRE(report.time.has_value());
    CHECK(*report.time > 0.0);
    CHECK(*report.time >= report.bracket_lo);
    CHECK(*report.time <= report.bracket_hi);
    CHECK(report.tolerance == doctest::Approx(1e-8 * 20.0));
    // bisection residual: the outer coherence hits 1 - c3 at the event
    const DecoherenceEvaluator f14(
        {config.chain, config.coupling, Sector::uu, Sector::dd});
    const double g_abs = 1.2 * f14(*report.time);
    CHECK(g_abs == doctest::Approx(1.0 - 0.2).epsilon(1e-5));
  }
  SUBCASE("states born unentangled report t = 0") {
    RunConfig config = bell_critical();
    config.coeffs = {0.0, 0.0, 0.0};
    const EventReport report = sudden_death_time(config);
    REQUIRE(report.time.has_value());
    CHECK(*report.time == 0.0);
  }
}

TEST_CASE("transition detection") {
  SUBCASE("one-sided mixed state transitions when the overlap hits c3") {
    const RunConfig config = mixed_one_sided();
    const EventReport report = transition_time(config);
    REQUIRE(report.time.has_value());
    const DecoherenceEvaluator f14(
        {config.chain, config.coupling, Sector::uu, Sector::dd});
    CHECK(f14(*report.time) == doctest::Approx(0.2).epsilon(1e-6));
    // cross-check: direct root of |F14| - 0.2 on the same grid
    const double direct = [&] {
      const auto excess = [&](double t) { return f14(t) - 0.2; };
      double prev_t = 0.0;
      double prev = excess(0.0);
      for (int i = 1; i < config.grid.steps; ++i) {
        const double t = config.grid.t_max * i / (config.grid.steps - 1);
        const double cur = excess(t);
        if (prev > 0.0 && cur <= 0.0) {
          return bisect_down_crossing(excess, prev_t, t, 1e-10);
        }
        prev_t = t;
        prev = cur;
      }
      return -1.0;
    }();
    CHECK(*report.time == doctest::Approx(direct).epsilon(1e-6));
  }
  SUBCASE("dominant c3 means no transition") {
    RunConfig config = mixed_one_sided();
    config.coeffs = {0.2, -0.1, 0.5};
    const EventReport report = transition_time(config);
    CHECK_FALSE(report.time.has_value());
  }
  SUBCASE("no coupling means no transition") {
    RunConfig config = mixed_one_sided();
    config.coupling.strength = 0.0;
    const EventReport report = transition_time(config);
    CHECK_FALSE(report.time.has_value());
  }
}

TEST_CASE("oscillatory regimes report every crossing") {
  // zero field keeps the overlap oscillating through the death threshold,
  // so the signed concurrence crosses zero again and again
  RunConfig config = bell_critical();
  config.chain.field = 0.0;
  config.coeffs = {1.0, -0.2, 0.2};
  config.grid = {50.0, 5000};
  const EventReport report = sudden_death_time(config);
  REQUIRE(report.time.has_value());
  CHECK(report.multiple_crossings);
  CHECK(report.crossings.size() > 1);
  CHECK(report.crossings.front() == *report.time);
  for (std::size_t i = 1; i < report.crossings.size(); ++i) {
    CHECK(report.crossings[i] > report.crossings[i - 1]);
  }
}

TEST_CASE("event times are grid independent once refined") {
  RunConfig coarse = mixed_one_sided();
  RunConfig fine = mixed_one_sided();
  fine.grid.steps = 2 * coarse.grid.steps;
  const EventReport a = transition_time(coarse);
  const EventReport b = transition_time(fine);
  REQUIRE(a.time.has_value());
  REQUIRE(b.time.has_value());
  CHECK(std::abs(*a.time - *b.time) < 10.0 * a.tolerance);
}

TEST_CASE("transition scan over the three-site strength") {
  const RunConfig config = mixed_one_sided();
  SUBCASE("unimodal scan with an interior peak") {
    const AlphaTransitionScan scan =
        transition_time_vs_alpha(config, -1.0, 1.0, 21);
    REQUIRE(scan.rows.size() == 21);
    for (const ScanRow& row : scan.rows) {
      REQUIRE(row.t_transition.has_value());
    }
    REQUIRE(scan.alpha_star.has_value());
    REQUIRE(scan.t_star.has_value());
    CHECK(*scan.alpha_star > -1.0);
    CHECK(*scan.alpha_star < 1.0);
    // the refined peak dominates the whole sampled scan
    for (const ScanRow& row : scan.rows) {
      CHECK(*scan.t_star >= *row.t_transition - 1e-6);
    }
    // prolongation relative to the plain chain
    const auto at_zero = std::find_if(
        scan.rows.begin(), scan.rows.end(),
        [](const ScanRow& row) { return std::abs(row.x) < 1e-12; });
    REQUIRE(at_zero != scan.rows.end());
    CHECK(*scan.t_star > *at_zero->t_transition);
  }
  SUBCASE("no coupling marks every row absent") {
    RunConfig free = config;
    free.coupling.strength = 0.0;
    const AlphaTransitionScan scan =
        transition_time_vs_alpha(free, -1.0, 1.0, 5);
    for (const ScanRow& row : scan.rows) {
      CHECK_FALSE(row.t_transition.has_value());
    }
    CHECK_FALSE(scan.alpha_star.has_value());
  }
}

TEST_CASE("transition scan over the anisotropy") {
  RunConfig config = mixed_one_sided();
  config.chain.three_site = 0.0;
  SUBCASE("fit finds an interior minimum") {
    const GammaTransitionScan scan =
        transition_time_vs_gamma(config, 0.2, 1.2, 11, 4);
    REQUIRE(scan.rows.size() == 11);
    REQUIRE(scan.fit.size() == 5);
    REQUIRE(scan.fitted_minimum.has_value());
    CHECK(*scan.fitted_minimum > 0.2);
    CHECK(*scan.fitted_minimum < 1.2);
  }
  SUBCASE("range and degree validation") {
    CHECK_THROWS_AS(transition_time_vs_gamma(config, 0.0, 1.0, 11, 4),
                    ConfigError);
    CHECK_THROWS_AS(transition_time_vs_gamma(config, 0.5, 0.5, 11, 4),
                    ConfigError);
    CHECK_THROWS_AS(transition_time_vs_gamma(config, 0.2, 1.2, 1, 4),
                    ConfigError);
    CHECK_THROWS_AS(transition_time_vs_gamma(config, 0.2, 1.2, 4, 4),
                    ConfigError);
  }
}

TEST_CASE("optimal three-site strength") {
  const RunConfig config = bell_critical();
  SUBCASE("degenerate without coupling") {
    RunConfig free = config;
    free.coupling.strength = 0.0;
    const OptimalAlpha result = find_optimal_alpha(free, 5.0, -1.0, 1.0);
    CHECK(result.degenerate);
    CHECK(result.f14 == 1.0);
  }
  SUBCASE("matches a dense scan at the critical point") {
    const OptimalAlpha result = find_optimal_alpha(config, 5.0, -1.0, 0.5);
    CHECK_FALSE(result.degenerate);
    CHECK_FALSE(result.boundary);
    // dense reference scan
    const DecoherenceConfig base{config.chain, config.coupling, Sector::uu,
                                 Sector::dd};
    double best_alpha = 0.0;
    double best = -1.0;
    for (int i = 0; i <= 1500; ++i) {
      const double alpha = -1.0 + 1.5 * i / 1500.0;
      DecoherenceConfig probe = base;
      probe.chain.three_site = alpha;
      const double value = decoherence_factor(probe, 5.0);
      if (value > best) {
        best = value;
        best_alpha = alpha;
      }
    }
    CHECK(result.alpha == doctest::Approx(best_alpha).epsilon(0.0).scale(1.0).epsilon(2e-3));
    CHECK(result.f14 >= best - 1e-9);
  }
  SUBCASE("agrees with the long-wavelength rate vertex to 20 percent") {
    const OptimalAlpha result = find_optimal_alpha(config, 5.0, -1.0, 0.5);
    const double vertex = gaussian_vertex_alpha(config.coupling.strength, 3,
                                                config.chain.sites);
    CHECK(std::abs(result.alpha - vertex) < 0.2 * std::abs(result.alpha));
  }
  SUBCASE("monotone brackets are flagged as boundary solutions") {
    const OptimalAlpha result = find_optimal_alpha(config, 5.0, 0.2, 1.0);
    CHECK(result.boundary);
  }
}

TEST_CASE("polynomial fit helpers") {
  SUBCASE("recovers exact polynomial data") {
    std::vector<double> xs;
    std::vector<double> ys;
    for (int i = 0; i <= 10; ++i) {
      const double x = 0.3 * i - 1.0;
      xs.push_back(x);
      ys.push_back(2.0 - x + 0.5 * x * x * x);
    }
    const std::vector<double> fit = polynomial_fit(xs, ys, 3);
    REQUIRE(fit.size() == 4);
    CHECK(fit[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit[1] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(fit[2] == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(fit[3] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(polynomial_eval(fit, 0.7) == doctest::Approx(2.0 - 0.7 + 0.5 * 0.343)
                                           .epsilon(1e-9));
  }
  SUBCASE("degree validation") {
    CHECK_THROWS_AS(polynomial_fit({1.0, 2.0}, {1.0, 2.0}, 2), ConfigError);
  }
}

TEST_CASE("scalar search helpers") {
  const auto parabola = [](double x) { return -(x - 0.3) * (x - 0.3); };
  CHECK(golden_section_max(parabola, 0.0, 1.0, 1e-8) ==
        doctest::Approx(0.3).epsilon(1e-6));
  const auto line = [](double x) { return 0.7 - x; };
  CHECK(bisect_down_crossing(line, 0.0, 1.0, 1e-10) ==
        doctest::Approx(0.7).epsilon(1e-8));
}
