#pragma once

#include <cmath>

namespace spinchain {

// Golden-section maximization of a unimodal scalar function on [lo, hi].
// Returns the abscissa of the maximum to within xtol.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double xtol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Bisection for a down-crossing of f through zero: requires f(lo) > 0 and
// f(hi) <= 0. Returns the crossing abscissa to within xtol.
template <class F>
double bisect_down_crossing(F&& f, double lo, double hi, double xtol) {
  double a = lo;
  double b = hi;
  while (b - a > xtol) {
    const double mid = 0.5 * (a + b);
    if (f(mid) > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace spinchain
