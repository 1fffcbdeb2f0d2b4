#include "spinchain/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace spinchain {

namespace {

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double chi_parameter(const XState& state) {
  return std::max(std::abs(state.c3), 0.5 * (state.w_abs + state.g_abs));
}

// Entropy of a 2x2 density matrix [[a, gamma], [conj(gamma), 1 - a]].
double qubit_entropy(double a, const std::complex<double>& gamma) {
  const double offset = std::sqrt((a - 0.5) * (a - 0.5) + std::norm(gamma));
  return binary_entropy(0.5 + offset);
}

}  // namespace

double binary_entropy(double p) { return -xlog2(p) - xlog2(1.0 - p); }

double mutual_information(const XState& state) {
  const XStateSpectrum eig = spectrum(state);
  double info = 2.0;
  for (double w : eig.omega) {
    info += xlog2(w);
  }
  return info;
}

double classical_correlation(const XState& state) {
  double chi = chi_parameter(state);
  if (chi > 1.0) {
    if (chi > 1.0 + k_positivity_tol) {
      throw PositivityError("correlation parameter chi=" +
                            std::to_string(chi) + " exceeds 1");
    }
    chi = 1.0;
  }
  return 0.5 * (xlog2(1.0 + chi) + xlog2(1.0 - chi));
}

double classical_correlation_sweep(const XState& state,
                                   const SweepOptions& options) {
  if (options.grid < 64) {
    throw ConfigError("measurement sweep needs at least 64 grid points per "
                      "angle");
  }
  // Projectors built from cos(theta)|0> + e^{i phi} sin(theta)|1> and its
  // orthogonal complement; outcome probabilities are both 1/2 and the
  // marginal of qubit A is maximally mixed, so the objective is
  // 1 - (S1 + S2)/2.
  const auto objective = [&](double theta, double phi) {
    const std::complex<double> gamma =
        0.25 *
        (std::polar(1.0, -phi) * state.w_abs +
         std::polar(1.0, phi) * state.g_abs) *
        std::sin(2.0 * theta);
    const double a1 = 0.5 * (1.0 + state.c3 * std::cos(2.0 * theta));
    const double s1 = qubit_entropy(a1, gamma);
    const double s2 = qubit_entropy(1.0 - a1, -gamma);
    return 1.0 - 0.5 * (s1 + s2);
  };

  // The objective repeats outside [0, pi/2] x [0, pi].
  const double theta_hi = 0.5 * std::numbers::pi;
  const double phi_hi = std::numbers::pi;
  const int n = options.grid;
  const double theta_step = theta_hi / (n - 1);
  const double phi_step = phi_hi / (n - 1);

  double best = -1.0;
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double theta = i * theta_step;
    for (int j = 0; j < n; ++j) {
      const double phi = j * phi_step;
      const double value = objective(theta, phi);
      if (value > best) {  // ties keep the smaller theta, then smaller phi
        best = value;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  double step_theta = theta_step;
  double step_phi = phi_step;
  for (int iter = 0; iter < options.refine_iters; ++iter) {
    double gain = 0.0;
    for (double candidate : {best_theta - step_theta, best_theta + step_theta}) {
      candidate = std::clamp(candidate, 0.0, theta_hi);
      const double value = objective(candidate, best_phi);
      if (value > best) {
        gain += value - best;
        best = value;
        best_theta = candidate;
      }
    }
    for (double candidate : {best_phi - step_phi, best_phi + step_phi}) {
      candidate = std::clamp(candidate, 0.0, phi_hi);
      const double value = objective(best_theta, candidate);
      if (value > best) {
        gain += value - best;
        best = value;
        best_phi = candidate;
      }
    }
    if (gain < options.tol) {
      step_theta *= 0.5;
      step_phi *= 0.5;
    }
  }
  return best;
}

double quantum_discord(const XState& state) {
  return mutual_information(state) - classical_correlation(state);
}

double concurrence(const XState& state) {
  return std::max({0.0, 0.5 * (state.g_abs + state.c3 - 1.0),
                   0.5 * (state.w_abs - state.c3 - 1.0)});
}

double concurrence_wootters(const XState& state) {
  const Eigen::Matrix4d rho = to_matrix(state);
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();  // sigma_y tensor sigma_y
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  // rho is real, so conjugation is a no-op
  const Eigen::Matrix4d flipped = yy * rho * yy;
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(rho * flipped);
  Eigen::Vector4d roots =
      solver.eigenvalues().real().cwiseMax(0.0).cwiseSqrt();
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double eof_from_concurrence(double c) {
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  return binary_entropy(0.5 * (1.0 + root));
}

double entanglement_of_formation(const XState& state) {
  return eof_from_concurrence(concurrence(state));
}

CorrelationReport correlation_report(const XState& state) {
  CorrelationReport report;
  report.mutual_info = mutual_information(state);
  report.classical = classical_correlation(state);
  report.discord = report.mutual_info - report.classical;
  report.concurrence = concurrence(state);
  report.eof = eof_from_concurrence(report.concurrence);
  return report;
}

}  // namespace spinchain
