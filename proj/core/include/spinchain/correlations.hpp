#pragma once

#include "spinchain/xstate.hpp"

namespace spinchain {

// All correlation measures of one X state at one instant. Entropies are in
// bits throughout; discord = mutual_info - classical by construction.
struct CorrelationReport {
  double mutual_info = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
};

// -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0 enforced by branch.
double binary_entropy(double p);

// I = 2 + sum_n omega_n log2 omega_n (marginals are maximally mixed).
double mutual_information(const XState& state);

// Closed form: C = ((1+chi)/2) log2(1+chi) + ((1-chi)/2) log2(1-chi) with
// chi = max(|c3|, (w_abs + g_abs)/2). Equals 1 - binary_entropy((1+chi)/2).
// Throws PositivityError if chi exceeds 1 beyond tolerance.
double classical_correlation(const XState& state);

struct SweepOptions {
  int grid = 256;         // points per measurement angle, >= 64
  int refine_iters = 50;  // coordinate-descent iterations after the grid
  double tol = 1e-8;      // objective tolerance for step shrinking
};

// Measurement-sweep evaluation of the classical correlation: maximizes
// S(rho_A) - sum_j p_j S(rho_A^(j)) over projective measurements on qubit B,
// building the post-measurement qubit-A states explicitly. Grid search over
// (theta, phi) in [0, pi/2] x [0, pi] (the objective repeats outside that
// box) followed by coordinate descent. This is the oracle for the closed
// form above.
double classical_correlation_sweep(const XState& state,
                                   const SweepOptions& options = {});

// Q = I - C from the closed forms.
double quantum_discord(const XState& state);

// Closed-form X-state concurrence:
// max(0, (g_abs + c3 - 1)/2, (w_abs - c3 - 1)/2).
double concurrence(const XState& state);

// Spin-flip concurrence from the dense matrix: eigenvalues of rho * rho_tilde
// with rho_tilde = (sy tensor sy) rho^* (sy tensor sy), square roots sorted
// descending, max(0, r0 - r1 - r2 - r3). Oracle for the closed form.
double concurrence_wootters(const XState& state);

// E = binary_entropy((1 + sqrt(1 - c^2)) / 2); 0 at c = 0, 1 at c = 1.
double eof_from_concurrence(double c);

double entanglement_of_formation(const XState& state);

CorrelationReport correlation_report(const XState& state);

}  // namespace spinchain
