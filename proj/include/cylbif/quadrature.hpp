#pragma once

#include <cmath>
#include <string>

#include "cylbif/errors.hpp"

namespace cylbif {

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth, int& evals) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  if (depth <= 0) throw QuadratureError("adaptive Simpson: recursion limit reached");
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, evals) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, evals);
}

}  // namespace detail

/// Adaptive Simpson quadrature of a smooth integrand to an absolute tolerance.
/// The interval is pre-split into `pieces` panels so oscillatory integrands are sampled.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol = 1e-12, int max_depth = 40,
                        int pieces = 16) {
  if (!(b > a)) throw QuadratureError("adaptive_simpson requires a < b");
  double total = 0.0;
  int evals = 0;
  const double w = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * w;
    const double hi = (i + 1 == pieces) ? b : lo + w;
    const double fa = f(lo);
    const double fb = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    total += detail::simpson_step(f, lo, hi, fa, fm, fb, whole, abs_tol / pieces, max_depth, evals);
  }
  if (!std::isfinite(total)) throw QuadratureError("adaptive Simpson produced a non-finite value");
  return total;
}

}  // namespace cylbif
