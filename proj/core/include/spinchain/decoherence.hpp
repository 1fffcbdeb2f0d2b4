#pragma once

#include <vector>

#include "spinchain/spectrum.hpp"

namespace spinchain {

// Which pair of dressed chain Hamiltonians the overlap compares.
struct DecoherenceConfig {
  ChainParams chain;
  CouplingParams coupling;
  Sector mu = Sector::uu;
  Sector nu = Sector::dd;
};

// |F_mu_nu(t)|: modulus of the overlap between the chain ground state evolved
// under the two dressed Hamiltonians. Product over momentum pairs of a
// per-mode factor in [0, 1]; precomputes the per-mode terms so repeated
// evaluation over a time grid only costs trigonometry.
//
// The per-mode factor is evaluated in the cancellation-free form
//   1 - (p - q)^2 - 4 p q [sin^2((Lu - Lv) t / 2) + sin^2(Tu - Tv) su sv]
// with p = sin(2 Tu) su, q = sin(2 Tv) sv, su = sin(Lu t), sv = sin(Lv t),
// which is algebraically identical to the expanded product formula and keeps
// the t = 0, mu = nu and g = 0 identities exact in floating point.
class DecoherenceEvaluator {
 public:
  explicit DecoherenceEvaluator(const DecoherenceConfig& config);

  // |F(t)| in [0, 1]; throws ConsistencyError if a per-mode factor leaves
  // [0, 1] by more than 1e-10 (it is clamped inside that tolerance).
  double operator()(double t) const;

  const std::array<bool, 4>& negative_mode_energy() const { return negative_; }

 private:
  struct ModeTerm {
    double sin2_mu = 0.0;   // sin(2 * rel_angle[mu])
    double sin2_nu = 0.0;   // sin(2 * rel_angle[nu])
    double freq_mu = 0.0;   // mode_energy[mu]
    double freq_nu = 0.0;   // mode_energy[nu]
    double rel_sq = 0.0;    // sin^2(rel_angle[mu] - rel_angle[nu])
  };
  std::vector<ModeTerm> terms_;
  std::array<bool, 4> negative_{};
};

// One-shot convenience wrapper around DecoherenceEvaluator.
double decoherence_factor(const DecoherenceConfig& config, double t);

// Independent reconstruction of the same overlap from explicit 2x2 unitaries:
// per mode, U = R * diag(e^{+i L t}, e^{-i L t}) * R^dagger with
// R = [[cos T, i sin T], [i sin T, cos T]], applied to (1, 0); the result is
// the product over modes of |<(1,0)| U_nu^dagger U_mu |(1,0)>|. Slower than
// decoherence_factor; used to cross-validate it.
double mode_overlap_oracle(const DecoherenceConfig& config, double t);

// Weak-coupling Gaussian envelope exp(-(tau1 + tau2 + tau3) t^2).
// Diagnostic only: the exact product is the source of truth.
struct GaussianApprox {
  double tau1 = 0.0;  // quadratic in the coupling strength
  double tau2 = 0.0;  // mixed coupling / three-site term, may be negative
  double tau3 = 0.0;  // quadratic in the three-site strength

  double rate() const { return tau1 + tau2 + tau3; }
  bool negative_rate() const { return rate() < 0.0; }
  double operator()(double t) const;
};

// Rates from the truncated momentum sums sum_{k<=cutoff} (k/length_scale)^n.
// cutoff <= 0 selects M, length_scale <= 0 selects N. Throws ConfigError at
// unit transverse field where the envelope is undefined.
GaussianApprox gaussian_rates(const ChainParams& chain,
                              const CouplingParams& coupling, int cutoff = 0,
                              double length_scale = 0.0);

double gaussian_approx_factor(const ChainParams& chain,
                              const CouplingParams& coupling, double t,
                              int cutoff = 0, double length_scale = 0.0);

// Vertex of the Gaussian rate read as a quadratic in the three-site strength:
// the value that minimizes the decay rate (maximizes the envelope).
double gaussian_vertex_alpha(double coupling_strength, int cutoff,
                             double length_scale);

// Zero-field oscillatory envelope: product over modes of
// exp(-d_k sin^2(2 w_k t)) with w_k = 1 + 4*pi*three_site*k/N and d_k >= 0
// the k-th summand of the printed amplitude (modulus taken so the result
// stays <= 1). Diagnostic only. Throws ConfigError at |g| = 1.
double oscillatory_approx_factor(const ChainParams& chain,
                                 const CouplingParams& coupling, double t,
                                 int cutoff = 0);

}  // namespace spinchain
