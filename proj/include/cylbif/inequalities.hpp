#pragma once

// Grid audits of the Turan-type margin J_nu^2 - J_{nu-1} J_{nu+1}, the
// monotonicity of h(s) = s J_{nu+1}/J_nu and f(s) = s I_{nu+1}/I_nu, and the
// interlacing of Bessel zeros. A passing scan is numerical evidence on the
// sampled grid, not a proof.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cylbif/besselkit.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif {

struct ScanReport {
  double nu = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int n_points = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  double argmin = 0.0;
  bool passed = true;
};

inline double turan_margin(Order nu, double s) {
  const double n = nu.value();
  const double c = bessel_j(nu, s);
  return c * c - bessel_j(Order(n - 1.0), s) * bessel_j(Order(n + 1.0), s);
}

namespace detail {

inline void check_scan(double lo, double hi, int n) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("scan interval must satisfy lo < hi");
  if (n < 2) throw DomainError("scan needs at least 2 points");
}

/// Minimum of g over n interior points of (lo, hi), then two rounds of 10x
/// refinement around the running argmin.
inline ScanReport scan_minimum(const std::function<double(double)>& g, double nu, double lo, double hi, int n,
                               bool refine) {
  check_scan(lo, hi, n);
  ScanReport r;
  r.nu = nu;
  r.lo = lo;
  r.hi = hi;
  r.n_points = n;
  const double dx = (hi - lo) / (n + 1);
  for (int i = 1; i <= n; ++i) {
    const double s = lo + i * dx;
    const double v = g(s);
    if (v < r.min_margin) {
      r.min_margin = v;
      r.argmin = s;
    }
  }
  if (refine) {
    double width = dx;
    for (int round = 0; round < 2; ++round) {
      const double a = std::max(lo + 0.01 * width, r.argmin - width);
      const double b = std::min(hi - 0.01 * width, r.argmin + width);
      const double step = width / 10.0;
      for (double s = a; s <= b; s += step) {
        const double v = g(s);
        if (v < r.min_margin) {
          r.min_margin = v;
          r.argmin = s;
        }
      }
      width = step;
    }
  }
  r.passed = r.min_margin > 0.0;
  return r;
}

inline ScanReport derivative_scan(const std::function<double(double)>& g, double nu, double lo, double hi, int n) {
  const double step = (hi - lo) / (10.0 * n);
  const auto deriv = [&](double s) { return (g(s + step) - g(s - step)) / (2.0 * step); };
  // Keep the stencil inside (lo, hi).
  return scan_minimum(deriv, nu, lo + step, hi - step, n, false);
}

}  // namespace detail

/// Turan margin over an interval inside (0, sqrt(lambda_2)).
inline ScanReport turan_margin_scan(const BallSpectrum& ball, double lo, double hi, int n) {
  if (lo < 0.0 || hi > ball.j2 * (1.0 + 1e-12)) throw DomainError("Turan scan interval must lie in (0, sqrt(lambda2))");
  const Order nu(ball.nu);
  return detail::scan_minimum([&](double s) { return turan_margin(nu, s); }, ball.nu, lo, hi, n, true);
}

/// Central-difference h' over the interval; PoleError if a grid point hits a zero of J_nu.
inline ScanReport h_monotonicity_scan(const BallSpectrum& ball, double lo, double hi, int n) {
  const Order nu(ball.nu);
  return detail::derivative_scan([&](double s) { return ratio_h(nu, s); }, ball.nu, lo, hi, n);
}

/// h'(s) from s (J_nu^2 - J_{nu-1} J_{nu+1}) / J_nu^2.
inline double h_prime_identity(Order nu, double s) {
  const double c = bessel_j(nu, s);
  return s * turan_margin(nu, s) / (c * c);
}

inline ScanReport f_monotonicity_scan(Order nu, double lo, double hi, int n) {
  if (hi > 50.0) throw DomainError("f monotonicity scan is limited to s <= 50");
  if (!(lo > 0.0)) throw DomainError("f monotonicity scan requires s > 0");
  return detail::derivative_scan([&](double s) { return ratio_f(nu, s); }, nu.value(), lo, hi, n);
}

struct BridgeInterval {
  double alpha;
  double beta;
};

/// (alpha, beta) = ordered pair of j_{nu-1,2} and j_{nu+1,1}; needs nu >= 1/2.
inline BridgeInterval bridge_interval(const BallSpectrum& ball) {
  if (ball.nu - 1.0 < -0.5) throw DomainError("bridge interval needs nu - 1 >= -1/2 (N >= 3)");
  const double a = bessel_zero(Order(ball.nu - 1.0), ZeroIndex(2));
  const double b = bessel_zero(Order(ball.nu + 1.0), ZeroIndex(1));
  return {std::min(a, b), std::max(a, b)};
}

/// Strict increase of the Turan margin across the bridge interval. An empty
/// interval passes trivially.
inline ScanReport bridge_monotonicity_scan(const BallSpectrum& ball, int n) {
  const auto iv = bridge_interval(ball);
  if (!(iv.beta > iv.alpha)) {
    ScanReport r;
    r.nu = ball.nu;
    r.lo = iv.alpha;
    r.hi = iv.beta;
    return r;
  }
  const Order nu(ball.nu);
  return detail::derivative_scan([&](double s) { return turan_margin(nu, s); }, ball.nu, iv.alpha, iv.beta, n);
}

struct InterlacingRecord {
  double tau = 0.0;
  bool passed = false;
  bool expected_failure = false;
  std::string counterexample;
};

/// Checks j_{tau,1} < j_{tau+1,1} < j_{tau,2} < j_{tau+1,2} < ... up to k_max.
/// tau = -1 is evaluated through J_{-1} = -J_1 and recorded as a known failure.
inline std::vector<InterlacingRecord> interlacing_audit(const std::vector<double>& taus, int k_max) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  std::vector<InterlacingRecord> out;
  for (const double tau : taus) {
    InterlacingRecord rec;
    rec.tau = tau;
    double zero_order = tau;
    if (tau == -1.0) {
      zero_order = 1.0;
      rec.expected_failure = true;
    } else if (tau < -0.5) {
      throw DomainError("interlacing audit supports tau = -1 or tau >= -1/2");
    }
    std::vector<double> chain;
    for (int k = 1; k <= k_max; ++k) {
      chain.push_back(bessel_zero(Order(zero_order), ZeroIndex(k)));
      chain.push_back(bessel_zero(Order(tau + 1.0), ZeroIndex(k)));
    }
    rec.passed = true;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!(chain[i] < chain[i + 1])) {
        rec.passed = false;
        std::ostringstream os;
        os.precision(12);
        const bool lower_first = i % 2 == 0;
        const int k_first = static_cast<int>(i / 2) + 1;
        const int k_second = static_cast<int>((i + 1) / 2) + 1;
        os << "j(" << (lower_first ? tau : tau + 1.0) << "," << k_first << ")=" << chain[i] << " >= j("
           << (lower_first ? tau + 1.0 : tau) << "," << k_second << ")=" << chain[i + 1];
        rec.counterexample = os.str();
        break;
      }
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace cylbif
