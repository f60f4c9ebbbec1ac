#pragma once

// Bessel functions of the first kind J and modified Bessel functions I of
// real order, the ratios used by the dispersion function, and positive zeros.
//
// Evaluation strategy:
//   * small arguments: the defining power series in "reduced" form
//     (s/2)^{-tau} J_tau(s), summed with Kahan compensation; 1/Gamma makes
//     the series valid for every real order, including negative integers;
//   * J for larger arguments: Miller backward recurrence normalised with
//     (s/2)^nu = sum_k (nu+2k) Gamma(nu+k)/k! J_{nu+2k}(s);
//   * I for larger arguments: the series of exp(-s) I_tau(s), whose terms are
//     all positive (no cancellation).
// Negative non-integer orders at larger arguments come from the three-term
// recurrence in the order.

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cylbif/errors.hpp"

namespace cylbif {

/// Real order tau of a Bessel function; finite and >= -3/2.
class Order {
 public:
  static constexpr double kMin = -1.5;

  explicit Order(double tau) : tau_(tau) {
    if (!std::isfinite(tau)) throw DomainError("Bessel order must be finite");
    if (tau < kMin) throw DomainError("Bessel order below -3/2: " + std::to_string(tau));
  }

  double value() const { return tau_; }
  Order shifted(double by) const { return Order(tau_ + by); }

 private:
  double tau_;
};

/// 1-based index of a positive zero.
class ZeroIndex {
 public:
  explicit ZeroIndex(int k) : k_(k) {
    if (k < 1) throw DomainError("zero index must be >= 1");
  }
  int value() const { return k_; }

 private:
  int k_;
};

enum class IScaling { None, Exponential };

namespace detail {

inline constexpr double kSqrt2Pi = 2.5066282746310005024;

/// Lanczos approximation, g = 7, nine coefficients.
inline double lanczos_sum(double x) {
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  double a = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) a += p[i] / (x + static_cast<double>(i));
  return a;
}

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

inline double gamma(double x) {
  if (is_nonpositive_integer(x)) return std::numeric_limits<double>::infinity();
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  // Integers up to 20 are exact products; the approximation is kept for the rest.
  if (x == std::floor(x) && x <= 21.0) {
    double r = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) r *= i;
    return r;
  }
  const double xm = x - 1.0;
  const double t = xm + 7.5;
  return kSqrt2Pi * std::pow(t, xm + 0.5) * std::exp(-t) * lanczos_sum(xm);
}

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires a positive argument");
  if (x < 0.5) return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  const double xm = x - 1.0;
  const double t = xm + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm));
}

/// 1/Gamma(x); zero at the poles of Gamma.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma(x);
}

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

/// sum_m sign^m (s/2)^{2m} / (m! Gamma(tau+m+1)); sign = -1 for J, +1 for I.
inline double reduced_series(double tau, double s, double sign) {
  const double half = 0.5 * s;
  const double q = sign * half * half;
  int m = 0;
  if (is_nonpositive_integer(tau)) m = static_cast<int>(-tau);
  // First non-vanishing term.
  double term = rgamma(tau + m + 1.0);
  for (int i = 1; i <= m; ++i) term *= q / i;
  KahanSum acc;
  constexpr int kMaxTerms = 600;
  for (int it = 0; it < kMaxTerms; ++it, ++m) {
    acc.add(term);
    if (term == 0.0 && acc.sum == 0.0 && s == 0.0) return 0.0;
    const bool past_peak = (m + 1.0) * std::abs(tau + m + 1.0) > half * half;
    if (past_peak && std::abs(term) <= 1e-17 * std::abs(acc.sum)) return acc.sum;
    term *= q / ((m + 1.0) * (tau + m + 1.0));
    if (!std::isfinite(term)) break;
  }
  throw ConvergenceError("Bessel power series did not converge (tau=" + std::to_string(tau) +
                         ", s=" + std::to_string(s) + ")");
}

/// Arguments up to this value use the power series for J.
inline constexpr double kJSeriesLimit = 6.0;

/// J_tau(s) for tau >= 0, s > 0 by Miller's backward recurrence.
inline double j_miller(double tau, double s) {
  const int n = static_cast<int>(std::floor(tau));
  const double nu0 = tau - n;
  const double big = std::max(static_cast<double>(n), s);
  int start = static_cast<int>(big + std::sqrt(160.0 * big)) + 12;
  if (start % 2 != 0) ++start;

  // g[k] = Gamma(nu0 + k) / k! for k >= 1.
  const int half_count = start / 2 + 1;
  std::vector<double> weight(static_cast<std::size_t>(half_count) + 1);
  weight[0] = gamma(nu0 + 1.0);
  double g = gamma(nu0 + 1.0);
  for (int k = 1; k <= half_count; ++k) {
    weight[static_cast<std::size_t>(k)] = (nu0 + 2.0 * k) * g;
    g *= (nu0 + k) / (k + 1.0);
  }

  double f_next = 0.0;  // f_{k+1}
  double f = 1e-30;     // f_k
  double fn = (start == n) ? f : 0.0;
  KahanSum norm;
  norm.add(weight[static_cast<std::size_t>(start / 2)] * f);
  for (int k = start; k >= 1; --k) {
    const double f_prev = (2.0 * (nu0 + k) / s) * f - f_next;
    f_next = f;
    f = f_prev;
    const int idx = k - 1;
    if (idx == n) fn = f;
    if (idx % 2 == 0) norm.add(weight[static_cast<std::size_t>(idx / 2)] * f);
    if (std::abs(f) > 1e250) {
      constexpr double scale = 1e-250;
      f *= scale;
      f_next *= scale;
      fn *= scale;
      norm.sum *= scale;
      norm.comp *= scale;
    }
  }
  if (norm.sum == 0.0 || !std::isfinite(norm.sum))
    throw ConvergenceError("Miller recurrence normalisation failed");
  return fn * std::pow(0.5 * s, nu0) / norm.sum;
}

inline double bessel_j_value(double tau, double s);

/// J_tau(s) for any supported tau; s >= 0 with the s = 0 checks done by the caller.
inline double bessel_j_value(double tau, double s) {
  if (s == 0.0) {
    if (tau == 0.0) return 1.0;
    if (tau > 0.0 || tau == std::floor(tau)) return 0.0;
    throw DomainError("J_tau(0) is unbounded for negative non-integer order");
  }
  if (tau < 0.0 && tau == std::floor(tau)) {
    const int n = static_cast<int>(-tau);
    const double v = bessel_j_value(-tau, s);
    return (n % 2 == 0) ? v : -v;
  }
  if (s <= kJSeriesLimit) return std::pow(0.5 * s, tau) * reduced_series(tau, s, -1.0);
  if (tau >= 0.0) return j_miller(tau, s);
  // J_tau = (2(tau+1)/s) J_{tau+1} - J_{tau+2}
  return (2.0 * (tau + 1.0) / s) * bessel_j_value(tau + 1.0, s) - bessel_j_value(tau + 2.0, s);
}

/// exp(-s) I_tau(s) for s > 0.
inline double bessel_i_scaled_value(double tau, double s) {
  if (tau < 0.0 && tau == std::floor(tau)) return bessel_i_scaled_value(-tau, s);
  if (tau <= -1.0) {
    // I_tau = (2(tau+1)/s) I_{tau+1} + I_{tau+2}
    return (2.0 * (tau + 1.0) / s) * bessel_i_scaled_value(tau + 1.0, s) +
           bessel_i_scaled_value(tau + 2.0, s);
  }
  if (s <= 1.0) return std::exp(-s) * std::pow(0.5 * s, tau) * reduced_series(tau, s, 1.0);

  const double half = 0.5 * s;
  const double q = half * half;
  if (s <= 600.0) {
    double term = std::exp(tau * std::log(half) - s) * rgamma(tau + 1.0);
    double sum = 0.0;
    for (int m = 0; m < 5000; ++m) {
      sum += term;
      const bool past_peak = (m + 1.0) * (tau + m + 1.0) > q;
      if (past_peak && term <= 1e-17 * sum) return sum;
      term *= q / ((m + 1.0) * (tau + m + 1.0));
    }
    throw ConvergenceError("scaled I series did not converge");
  }
  // Very large s: start at the peak term in log form to avoid underflow.
  const int peak = static_cast<int>(std::floor(0.5 * (std::sqrt(tau * tau + s * s) - tau)));
  auto log_term = [&](int m) {
    return (2.0 * m + tau) * std::log(half) - log_gamma(m + 1.0) - log_gamma(tau + m + 1.0) - s;
  };
  const double t_peak = std::exp(log_term(peak));
  double sum = t_peak;
  double term = t_peak;
  for (int m = peak; m < peak + 100000; ++m) {
    term *= q / ((m + 1.0) * (tau + m + 1.0));
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  term = t_peak;
  for (int m = peak; m >= 1; --m) {
    term *= (m * (tau + m)) / q;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum;
}

inline void require_positive(double s, const char* what) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError(std::string(what) + " requires s > 0");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Point evaluation
// ---------------------------------------------------------------------------

inline double gamma_fn(double x) { return detail::gamma(x); }

/// J_tau(s), s >= 0. s = 0 is rejected for negative non-integer order.
inline double bessel_j(Order tau, double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("bessel_j requires finite s >= 0");
  return detail::bessel_j_value(tau.value(), s);
}

/// (s/2)^{-tau} J_tau(s): the entire part of J, equal to 1/Gamma(tau+1) at s = 0.
inline double bessel_j_reduced(Order tau, double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("bessel_j_reduced requires finite s >= 0");
  const double t = tau.value();
  if (s <= detail::kJSeriesLimit) return detail::reduced_series(t, s, -1.0);
  return detail::bessel_j_value(t, s) / std::pow(0.5 * s, t);
}

/// J'_tau(s) from J_{tau-1} - J_{tau+1} = 2 J'_tau.
inline double bessel_j_prime(Order tau, double s) {
  detail::require_positive(s, "bessel_j_prime");
  const double t = tau.value();
  if (t - 1.0 >= Order::kMin)
    return 0.5 * (detail::bessel_j_value(t - 1.0, s) - detail::bessel_j_value(t + 1.0, s));
  // s J' - tau J = -s J_{tau+1} where the lower order is out of range.
  return (t / s) * detail::bessel_j_value(t, s) - detail::bessel_j_value(t + 1.0, s);
}

/// I_tau(s), s >= 0; with IScaling::Exponential returns exp(-s) I_tau(s).
inline double bessel_i(Order tau, double s, IScaling scaling = IScaling::None) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("bessel_i requires finite s >= 0");
  const double t = tau.value();
  if (s == 0.0) {
    if (t == 0.0) return 1.0;
    if (t > 0.0 || t == std::floor(t)) return 0.0;
    throw DomainError("I_tau(0) is unbounded for negative non-integer order");
  }
  const double scaled = detail::bessel_i_scaled_value(t, s);
  if (scaling == IScaling::Exponential) return scaled;
  if (scaled != 0.0 && std::log(std::abs(scaled)) + s > std::log(std::numeric_limits<double>::max()))
    throw OverflowError("I_tau(s) overflows; request the exponentially scaled form");
  return scaled * std::exp(s);
}

/// (s/2)^{-tau} I_tau(s); finite at s = 0.
inline double bessel_i_reduced(Order tau, double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("bessel_i_reduced requires finite s >= 0");
  const double t = tau.value();
  if (s <= 1.0) return detail::reduced_series(t, s, 1.0);
  return bessel_i(tau, s) / std::pow(0.5 * s, t);
}

// ---------------------------------------------------------------------------
// Ratios
// ---------------------------------------------------------------------------

/// Threshold below which |J_nu(s)| counts as a pole of ratio_h.
inline constexpr double kPoleMargin = 1e-13;

/// h(s) = s J_{nu+1}(s) / J_nu(s).
inline double ratio_h(Order nu, double s) {
  detail::require_positive(s, "ratio_h");
  const double n = nu.value();
  if (s <= 1.0) {
    // Below every zero of J_nu for nu >= -1/2; the reduced form keeps s -> 0 clean.
    return s * (0.5 * s) * detail::reduced_series(n + 1.0, s, -1.0) /
           detail::reduced_series(n, s, -1.0);
  }
  const double den = detail::bessel_j_value(n, s);
  const double num = detail::bessel_j_value(n + 1.0, s);
  if (std::abs(den) < kPoleMargin * std::max(1.0, std::abs(num)))
    throw PoleError("ratio_h evaluated at a zero of J_nu (s=" + std::to_string(s) + ")");
  return s * num / den;
}

/// f(s) = s I_{nu+1}(s) / I_nu(s); finite for every s > 0.
inline double ratio_f(Order nu, double s) {
  detail::require_positive(s, "ratio_f");
  const double n = nu.value();
  if (s <= 1.0)
    return s * (0.5 * s) * detail::reduced_series(n + 1.0, s, 1.0) /
           detail::reduced_series(n, s, 1.0);
  return s * detail::bessel_i_scaled_value(n + 1.0, s) / detail::bessel_i_scaled_value(n, s);
}

/// s I_{nu-1}(s) / I_nu(s); tends to 2 nu as s -> 0.
inline double ratio_f_lower(Order nu, double s) {
  detail::require_positive(s, "ratio_f_lower");
  const double n = nu.value();
  if (s <= 1.0)
    return 2.0 * detail::reduced_series(n - 1.0, s, 1.0) / detail::reduced_series(n, s, 1.0);
  return s * detail::bessel_i_scaled_value(n - 1.0, s) / detail::bessel_i_scaled_value(n, s);
}

/// I_{nu-1} I_{nu+1} / I_nu^2 (the powers of s/2 cancel, so reduced values are used near 0).
inline double i_product_ratio(Order nu, double s) {
  detail::require_positive(s, "i_product_ratio");
  const double n = nu.value();
  if (s <= 1.0) {
    const double c = detail::reduced_series(n, s, 1.0);
    return detail::reduced_series(n - 1.0, s, 1.0) * detail::reduced_series(n + 1.0, s, 1.0) / (c * c);
  }
  const double c = detail::bessel_i_scaled_value(n, s);
  return detail::bessel_i_scaled_value(n - 1.0, s) * detail::bessel_i_scaled_value(n + 1.0, s) / (c * c);
}

/// J_{nu-1} J_{nu+1} / J_nu^2; raises PoleError at zeros of J_nu.
inline double j_product_ratio(Order nu, double s) {
  detail::require_positive(s, "j_product_ratio");
  const double n = nu.value();
  if (s <= 1.0) {
    const double c = detail::reduced_series(n, s, -1.0);
    return detail::reduced_series(n - 1.0, s, -1.0) * detail::reduced_series(n + 1.0, s, -1.0) / (c * c);
  }
  const double c = detail::bessel_j_value(n, s);
  const double lo = detail::bessel_j_value(n - 1.0, s);
  const double hi = detail::bessel_j_value(n + 1.0, s);
  if (std::abs(c) < kPoleMargin * std::max({1.0, std::abs(lo), std::abs(hi)}))
    throw PoleError("j_product_ratio evaluated at a zero of J_nu");
  return lo * hi / (c * c);
}

// ---------------------------------------------------------------------------
// Zeros
// ---------------------------------------------------------------------------

/// k-th positive zero j_{tau,k}, tau >= -1/2. Sign-change scan with step pi/8,
/// bisection, then a Newton polish.
inline double bessel_zero(Order tau, ZeroIndex k, double scan_limit = 1000.0) {
  const double t = tau.value();
  if (t < -0.5) throw DomainError("bessel_zero requires tau >= -1/2");
  const double step = std::numbers::pi / 8.0;
  double a = std::max(0.1, t);
  double fa = detail::bessel_j_value(t, a);
  int found = 0;
  while (a < scan_limit) {
    const double b = a + step;
    const double fb = detail::bessel_j_value(t, b);
    if (fb == 0.0) {
      if (++found == k.value()) return b;
      a = b + 1e-9;
      fa = detail::bessel_j_value(t, a);
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0)) {
      if (++found == k.value()) {
        double lo = a, hi = b, flo = fa;
        for (int it = 0; it < 200 && hi - lo > 2.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = detail::bessel_j_value(t, mid);
          if (fm == 0.0) return mid;
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 3; ++it) {
          const double d = bessel_j_prime(tau, x);
          if (d == 0.0) break;
          const double next = x - detail::bessel_j_value(t, x) / d;
          if (!(next >= a && next <= b)) break;
          x = next;
        }
        return x;
      }
    }
    a = b;
    fa = fb;
  }
  throw ConvergenceError("bessel_zero: no bracket found below the scan limit");
}

}  // namespace cylbif
