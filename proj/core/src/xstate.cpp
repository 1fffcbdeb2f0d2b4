#include "spinchain/xstate.hpp"

#include <cmath>
#include <string>

namespace spinchain {

void validate(const BellDiagonalCoeffs& coeffs) {
  const double c1 = coeffs.c1;
  const double c2 = coeffs.c2;
  const double c3 = coeffs.c3;
  const std::array<double, 4> eigenvalues = {
      0.25 * (1.0 - c1 - c2 - c3), 0.25 * (1.0 - c1 + c2 + c3),
      0.25 * (1.0 + c1 - c2 + c3), 0.25 * (1.0 + c1 + c2 - c3)};
  for (double w : eigenvalues) {
    if (!(w >= -k_positivity_tol)) {
      throw PositivityError(
          "Bell-diagonal coefficients do not describe a state: eigenvalue " +
          std::to_string(w));
    }
  }
}

XState evolve_state(const BellDiagonalCoeffs& coeffs, double f14_abs,
                    double f23_abs) {
  XState state;
  state.c3 = coeffs.c3;
  state.g_abs = std::abs(coeffs.c1 - coeffs.c2) * f14_abs;
  state.w_abs = std::abs(coeffs.c1 + coeffs.c2) * f23_abs;
  return state;
}

XStateSpectrum spectrum(const XState& state) {
  XStateSpectrum result;
  result.omega = {0.25 * (1.0 - state.c3 + state.w_abs),
                  0.25 * (1.0 - state.c3 - state.w_abs),
                  0.25 * (1.0 + state.c3 + state.g_abs),
                  0.25 * (1.0 + state.c3 - state.g_abs)};
  for (double w : result.omega) {
    if (!(w >= -k_positivity_tol)) {
      throw PositivityError("evolved state not positive: eigenvalue " +
                            std::to_string(w));
    }
  }
  return result;
}

Eigen::Matrix4d to_matrix(const XState& state) {
  const double outer = 0.25 * (1.0 + state.c3);
  const double inner = 0.25 * (1.0 - state.c3);
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  rho(0, 0) = outer;
  rho(1, 1) = inner;
  rho(2, 2) = inner;
  rho(3, 3) = outer;
  rho(0, 3) = rho(3, 0) = 0.25 * state.g_abs;
  rho(1, 2) = rho(2, 1) = 0.25 * state.w_abs;
  return rho;
}

}  // namespace spinchain
