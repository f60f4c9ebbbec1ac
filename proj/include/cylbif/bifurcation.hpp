#pragma once

// Bifurcation periods T_* in [mu, delta) and T^* in (delta, inf), their
// transversality, resonance T^* = m T_*, kernel dimensions and first-order
// branch profiles.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cylbif/dispersion.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif {

struct RootResult {
  double root;
  double bracket_width;
};

/// Bisection of an increasing-through-zero function on [lo, hi] down to
/// floating-point resolution or `abs_tol`.
template <class F>
RootResult bisect(const F& f, double lo, double hi, double abs_tol = 0.0) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0};
  if (fhi == 0.0) return {hi, 0.0};
  if ((flo < 0.0) == (fhi < 0.0))
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= abs_tol) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, 0.0};
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), hi - lo};
}

inline RootResult find_T_star(const BallSpectrum& ball) {
  const auto c = structural_constants(ball);
  const auto f = [&](double T) { return sigma(ball, T).sigma; };
  return bisect(f, c.mu * (1.0 - 1e-6), c.delta - 1e-6);
}

inline RootResult find_T_upper_star(const BallSpectrum& ball) {
  const auto c = structural_constants(ball);
  const auto f = [&](double T) { return sigma(ball, T).sigma; };
  double d = 1e-3;
  double lo = c.delta + d;
  if (f(lo) >= 0.0) throw BracketError("sigma is not negative just above delta");
  for (int it = 0; it < 60; ++it) {
    d *= 2.0;
    const double hi = c.delta + d;
    if (f(hi) > 0.0) return bisect(f, lo, hi);
    lo = hi;
  }
  throw BracketError("no positive value of sigma found above delta");
}

inline constexpr double kResonanceTol = 1e-8;

inline std::optional<int> resonance_report(double t_star, double t_upper_star, double tol = kResonanceTol) {
  const double ratio = t_upper_star / t_star;
  const double m = std::round(ratio);
  if (m >= 2.0 && std::abs(ratio - m) <= tol) return static_cast<int>(m);
  return std::nullopt;
}

inline constexpr int kDefaultKMax = 16;

/// Number of k in 1..k_max with |sigma(T/k)| <= threshold, for any sigma callable.
template <class SigmaFn>
int kernel_dimension_of(const SigmaFn& sigma_of, double T, int k_max, double threshold) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  int count = 0;
  for (int k = 1; k <= k_max; ++k)
    if (std::abs(sigma_of(T / k)) <= threshold) ++count;
  return count;
}

inline int kernel_dimension(const BallSpectrum& ball, double T, int k_max = kDefaultKMax) {
  return kernel_dimension_of([&](double t) { return sigma(ball, t).sigma; }, T, k_max,
                             1e-8 * (1.0 + std::abs(ball.dphi2)));
}

struct Transversality {
  double sigma_prime;
  double secant_slope;
  double relative_difference;
};

inline Transversality transversality(const BallSpectrum& ball, double T_root, double step = 1e-6) {
  Transversality t{};
  t.sigma_prime = sigma_prime(ball, T_root);
  t.secant_slope = (sigma(ball, T_root + step).sigma - sigma(ball, T_root - step).sigma) / (2.0 * step);
  t.relative_difference = std::abs(t.secant_slope - t.sigma_prime) / std::abs(t.sigma_prime);
  if (!(t.sigma_prime > 0.0))
    throw TransversalityFailure("sigma' is not positive at T=" + std::to_string(T_root));
  if (t.relative_difference > 1e-4)
    throw TransversalityFailure("sigma' disagrees with the secant slope at T=" + std::to_string(T_root));
  return t;
}

struct BifurcationReport {
  int n = 0;
  double t_star = 0.0;
  double t_upper_star = 0.0;
  double sigma_prime_at_star = 0.0;
  double sigma_prime_at_upper = 0.0;
  std::optional<int> resonance_m;
  int kernel_dim_at_star = 0;
  int kernel_dim_at_upper = 0;
  std::pair<double, double> bracket_widths{0.0, 0.0};
};

inline BifurcationReport analyze_bifurcation(const BallSpectrum& ball, int k_max = kDefaultKMax) {
  BifurcationReport r;
  r.n = ball.n;
  const auto lower = find_T_star(ball);
  const auto upper = find_T_upper_star(ball);
  r.t_star = lower.root;
  r.t_upper_star = upper.root;
  r.bracket_widths = {lower.bracket_width, upper.bracket_width};
  r.sigma_prime_at_star = transversality(ball, r.t_star).sigma_prime;
  r.sigma_prime_at_upper = transversality(ball, r.t_upper_star).sigma_prime;
  r.resonance_m = resonance_report(r.t_star, r.t_upper_star);
  r.kernel_dim_at_star = kernel_dimension(ball, r.t_star, k_max);
  r.kernel_dim_at_upper = kernel_dimension(ball, r.t_upper_star, k_max);
  return r;
}

inline nlohmann::json to_json(const BifurcationReport& r) {
  nlohmann::json j = {{"schema", 1},
                      {"n", r.n},
                      {"t_star", r.t_star},
                      {"t_upper_star", r.t_upper_star},
                      {"dsigma_star", r.sigma_prime_at_star},
                      {"dsigma_upper", r.sigma_prime_at_upper},
                      {"kernel_dim_star", r.kernel_dim_at_star},
                      {"kernel_dim_upper", r.kernel_dim_at_upper}};
  j["resonance_m"] = r.resonance_m ? nlohmann::json(*r.resonance_m) : nlohmann::json(nullptr);
  return j;
}

enum class BranchPoint { Star, UpperStar };

struct BranchProfile {
  double T;
  double s;
  double beta;
  double gamma;
  std::optional<int> m;
  std::vector<std::pair<double, double>> samples;  // (t, R(t))

  /// Cosine coefficients of v(theta) = R - 1 in theta = 2 pi t / T.
  std::vector<std::pair<int, double>> cosine_coeffs() const {
    std::vector<std::pair<int, double>> c;
    if (s * beta != 0.0) c.emplace_back(1, s * beta);
    if (m && s * gamma != 0.0) c.emplace_back(*m, s * gamma);
    return c;
  }
};

/// R(t) = 1 + s (beta cos(2 pi t / T) + gamma cos(2 m pi t / T)), sampled over one period.
inline BranchProfile branch_profile(const BifurcationReport& report, BranchPoint which, double s,
                                    double beta, double gamma, int n_samples) {
  if (n_samples < 2) throw DomainError("branch_profile needs at least 2 samples");
  if (std::abs(beta * beta + gamma * gamma - 1.0) > 1e-12)
    throw DomainError("branch_profile requires beta^2 + gamma^2 = 1");
  const bool two_mode = which == BranchPoint::UpperStar && report.resonance_m.has_value();
  if (gamma != 0.0 && !two_mode)
    throw ResonanceContractError("a second mode needs a resonant upper bifurcation period");
  BranchProfile p;
  p.T = which == BranchPoint::Star ? report.t_star : report.t_upper_star;
  p.s = s;
  p.beta = beta;
  p.gamma = gamma;
  if (two_mode) p.m = report.resonance_m;
  const double two_pi = 2.0 * std::numbers::pi;
  double min_r = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    const double t = p.T * i / n_samples;
    double v = beta * std::cos(two_pi * t / p.T);
    if (p.m) v += gamma * std::cos(two_pi * (*p.m) * t / p.T);
    const double R = 1.0 + s * v;
    min_r = std::min(min_r, R);
    p.samples.emplace_back(t, R);
  }
  if (!(min_r > 0.0)) throw AmplitudeError("amplitude too large: the profile radius is not positive");
  return p;
}

}  // namespace cylbif
