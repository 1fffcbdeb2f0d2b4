#include "spinchain/decoherence.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace spinchain {

namespace {

constexpr double k_pi = std::numbers::pi;
constexpr double k_bracket_tol = 1e-10;
constexpr double k_underflow_guard = 1e-300;

void require_nonnegative_time(double t) {
  if (!(t >= 0.0)) {
    throw ConfigError("time must be >= 0");
  }
}

int resolve_cutoff(const ChainParams& chain, int cutoff) {
  if (cutoff > 0) {
    return cutoff;
  }
  return mode_count(chain);
}

}  // namespace

DecoherenceEvaluator::DecoherenceEvaluator(const DecoherenceConfig& config) {
  const ModeTable table = mode_table(config.chain, config.coupling);
  negative_ = table.negative_mode_energy;
  const int mu = static_cast<int>(config.mu);
  const int nu = static_cast<int>(config.nu);
  terms_.reserve(table.modes.size());
  for (const ModeData& mode : table.modes) {
    ModeTerm term;
    term.sin2_mu = std::sin(mode.angle[mu] - mode.angle_bare);
    term.sin2_nu = std::sin(mode.angle[nu] - mode.angle_bare);
    term.freq_mu = mode.mode_energy[mu];
    term.freq_nu = mode.mode_energy[nu];
    const double half_diff = 0.5 * (mode.angle[mu] - mode.angle[nu]);
    term.rel_sq = std::sin(half_diff) * std::sin(half_diff);
    terms_.push_back(term);
  }
}

double DecoherenceEvaluator::operator()(double t) const {
  require_nonnegative_time(t);
  double product = 1.0;
  double log_sum = 0.0;
  bool in_log_space = false;
  for (const ModeTerm& m : terms_) {
    const double osc_mu = std::sin(m.freq_mu * t);
    const double osc_nu = std::sin(m.freq_nu * t);
    const double p = m.sin2_mu * osc_mu;
    const double q = m.sin2_nu * osc_nu;
    const double beat = std::sin(0.5 * (m.freq_mu - m.freq_nu) * t);
    double factor = 1.0 - (p - q) * (p - q) -
                    4.0 * p * q * (beat * beat + m.rel_sq * osc_mu * osc_nu);
    if (factor < 0.0) {
      if (factor < -k_bracket_tol) {
        throw ConsistencyError("per-mode overlap factor " +
                               std::to_string(factor) + " below 0 at t=" +
                               std::to_string(t));
      }
      factor = 0.0;
    } else if (factor > 1.0) {
      if (factor > 1.0 + k_bracket_tol) {
        throw ConsistencyError("per-mode overlap factor " +
                               std::to_string(factor) + " above 1 at t=" +
                               std::to_string(t));
      }
      factor = 1.0;
    }
    const double root = std::sqrt(factor);
    if (in_log_space) {
      log_sum += std::log(root);
    } else {
      product *= root;
      if (product < k_underflow_guard) {
        // switch to summed logarithms before gradual underflow degrades it
        in_log_space = true;
        log_sum = std::log(product);
      }
    }
  }
  return in_log_space ? std::exp(log_sum) : product;
}

double decoherence_factor(const DecoherenceConfig& config, double t) {
  return DecoherenceEvaluator(config)(t);
}

double mode_overlap_oracle(const DecoherenceConfig& config, double t) {
  require_nonnegative_time(t);
  const ModeTable table = mode_table(config.chain, config.coupling);
  const int mu = static_cast<int>(config.mu);
  const int nu = static_cast<int>(config.nu);
  const std::complex<double> i_unit(0.0, 1.0);
  const Eigen::Vector2cd vacuum(1.0, 0.0);
  double product = 1.0;
  for (const ModeData& mode : table.modes) {
    const auto evolution = [&](int sector) -> Eigen::Matrix2cd {
      const double rel = mode.rel_angle[sector];
      Eigen::Matrix2cd rotation;
      rotation << std::cos(rel), i_unit * std::sin(rel),
          i_unit * std::sin(rel), std::cos(rel);
      Eigen::Matrix2cd phase = Eigen::Matrix2cd::Zero();
      phase(0, 0) = std::exp(i_unit * (mode.mode_energy[sector] * t));
      phase(1, 1) = std::exp(-i_unit * (mode.mode_energy[sector] * t));
      return rotation * phase * rotation.adjoint();
    };
    const Eigen::Matrix2cd combined =
        evolution(nu).adjoint() * evolution(mu);
    product *= std::abs(vacuum.dot(combined * vacuum));
  }
  return product;
}

double GaussianApprox::operator()(double t) const {
  return std::exp(-rate() * t * t);
}

GaussianApprox gaussian_rates(const ChainParams& chain,
                              const CouplingParams& coupling, int cutoff,
                              double length_scale) {
  validate(chain);
  if (chain.field == 1.0) {
    throw ConfigError(
        "gaussian envelope undefined at unit transverse field (rate has a "
        "(field - 1)^-2 factor)");
  }
  const int kc = resolve_cutoff(chain, cutoff);
  const double scale =
      length_scale > 0.0 ? length_scale : static_cast<double>(chain.sites);
  double s2 = 0.0;
  double s3 = 0.0;
  double s4 = 0.0;
  for (int k = 1; k <= kc; ++k) {
    const double r = static_cast<double>(k) / scale;
    const double r2 = r * r;
    s2 += r2;
    s3 += r2 * r;
    s4 += r2 * r2;
  }
  const double gamma_sq = chain.anisotropy * chain.anisotropy;
  const double inv_detuning_sq =
      1.0 / ((chain.field - 1.0) * (chain.field - 1.0));
  const double pi2 = k_pi * k_pi;
  GaussianApprox approx;
  approx.tau1 = 32.0 * pi2 * gamma_sq * coupling.strength *
                coupling.strength * inv_detuning_sq * s2;
  approx.tau2 = 256.0 * pi2 * k_pi * gamma_sq * coupling.strength *
                chain.three_site * inv_detuning_sq * s3;
  approx.tau3 = 512.0 * pi2 * pi2 * gamma_sq * chain.three_site *
                chain.three_site * inv_detuning_sq * s4;
  return approx;
}

double gaussian_approx_factor(const ChainParams& chain,
                              const CouplingParams& coupling, double t,
                              int cutoff, double length_scale) {
  require_nonnegative_time(t);
  return gaussian_rates(chain, coupling, cutoff, length_scale)(t);
}

double gaussian_vertex_alpha(double coupling_strength, int cutoff,
                             double length_scale) {
  if (cutoff < 1 || !(length_scale > 0.0)) {
    throw ConfigError("gaussian vertex needs cutoff >= 1 and a positive "
                      "length scale");
  }
  double s3 = 0.0;
  double s4 = 0.0;
  for (int k = 1; k <= cutoff; ++k) {
    const double r = static_cast<double>(k) / length_scale;
    s3 += r * r * r;
    s4 += r * r * r * r;
  }
  return -(coupling_strength / (4.0 * k_pi)) * s3 / s4;
}

double oscillatory_approx_factor(const ChainParams& chain,
                                 const CouplingParams& coupling, double t,
                                 int cutoff) {
  validate(chain);
  require_nonnegative_time(t);
  const double g = coupling.strength;
  if (g == 1.0 || g == -1.0) {
    throw ConfigError("oscillatory envelope undefined at |g| = 1");
  }
  const int kc = resolve_cutoff(chain, cutoff);
  const double n = static_cast<double>(chain.sites);
  const double gamma_sq = chain.anisotropy * chain.anisotropy;
  const double g_sq = g * g;
  // modulus of the printed (negative) amplitude, distributed per mode
  const double prefactor = 8.0 * k_pi * k_pi * gamma_sq * g_sq * g_sq /
                           (n * n * (g - 1.0) * (g - 1.0) * (g + 1.0) *
                            (g + 1.0));
  double exponent = 0.0;
  for (int k = 1; k <= kc; ++k) {
    const double amplitude = prefactor * static_cast<double>(k) * k;
    const double varpi = 1.0 + 4.0 * chain.three_site * k_pi * k / n;
    const double osc = std::sin(2.0 * varpi * t);
    exponent += amplitude * osc * osc;
  }
  return std::exp(-exponent);
}

}  // namespace spinchain
