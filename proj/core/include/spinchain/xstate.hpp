#pragma once

#include <array>

#include <Eigen/Dense>

#include "spinchain/errors.hpp"

namespace spinchain {

// Tolerance below which a negative density-matrix eigenvalue is treated as
// roundoff; anything worse aborts with PositivityError.
inline constexpr double k_positivity_tol = 1e-12;

// Correlation coefficients (c1, c2, c3) of a Bell-diagonal two-qubit state.
struct BellDiagonalCoeffs {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

// Throws PositivityError unless the coefficients describe a positive state.
void validate(const BellDiagonalCoeffs& coeffs);

// Dephased two-qubit X state. The diagonal is fixed by c3 for all times;
// the anti-diagonal coherences decay through the two overlap factors:
//   g_abs = |c1 - c2| * |F14|   (|00><11| coherence)
//   w_abs = |c1 + c2| * |F23|   (|01><10| coherence)
// Phases are dropped: they are removable by local z rotations, which leave
// every correlation measure invariant.
struct XState {
  double c3 = 0.0;
  double g_abs = 0.0;
  double w_abs = 0.0;
};

XState evolve_state(const BellDiagonalCoeffs& coeffs, double f14_abs,
                    double f23_abs);

// The four eigenvalues of the X state, in closed form:
//   (1 - c3 +- w_abs)/4 and (1 + c3 +- g_abs)/4.
struct XStateSpectrum {
  std::array<double, 4> omega{};
};

// Throws PositivityError if any eigenvalue < -k_positivity_tol.
XStateSpectrum spectrum(const XState& state);

// Dense 4x4 density matrix in the product basis, coherences real >= 0.
Eigen::Matrix4d to_matrix(const XState& state);

}  // namespace spinchain
