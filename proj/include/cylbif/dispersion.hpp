#pragma once

// The dispersion function sigma(T): eigenvalue of the linearised Neumann
// deviation on the first axial Fourier mode of a cylinder of period T.

#include <cmath>
#include <numbers>
#include <string>

#include "cylbif/besselkit.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif {

enum class Branch { Subcritical, AtMu, Supercritical };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::Subcritical: return "subcritical";
    case Branch::AtMu: return "at_mu";
    case Branch::Supercritical: return "supercritical";
  }
  return "?";
}

struct DispersionPoint {
  double T;
  double sigma;
  Branch branch;
  double arg;  // xi below mu, rho above, 0 at mu
};

struct StructuralConstants {
  double mu;     // 2 pi / sqrt(lambda2)
  double delta;  // 2 pi / sqrt(lambda2 - lambda1), the singular period
};

/// Relative half-width of the excluded window around delta.
inline constexpr double kSingularMargin = 1e-9;

inline StructuralConstants structural_constants(const BallSpectrum& ball) {
  const double two_pi = 2.0 * std::numbers::pi;
  return {two_pi / ball.j2, two_pi / std::sqrt(ball.lambda2 - ball.lambda1)};
}

inline bool near_singular(const StructuralConstants& c, double T) {
  return std::abs(T - c.delta) <= kSingularMargin * c.delta;
}

namespace detail {
inline void check_period(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("period T must be positive and finite");
}
}  // namespace detail

inline DispersionPoint sigma(const BallSpectrum& ball, double T) {
  detail::check_period(T);
  const auto c = structural_constants(ball);
  if (near_singular(c, T))
    throw SingularPointError("sigma evaluated within the margin of delta=" + std::to_string(c.delta));
  const Order nu(ball.nu);
  const double kappa = 2.0 * std::numbers::pi / T;
  if (T == c.mu) return {T, -(2.0 * ball.nu + 1.0) * ball.dphi2, Branch::AtMu, 0.0};
  if (T < c.mu) {
    const double xi = std::sqrt(kappa * kappa - ball.lambda2);
    return {T, ball.d2phi2 - ball.dphi2 * ratio_f(nu, xi), Branch::Subcritical, xi};
  }
  const double rho = std::sqrt(ball.lambda2 - kappa * kappa);
  try {
    return {T, ball.d2phi2 + ball.dphi2 * ratio_h(nu, rho), Branch::Supercritical, rho};
  } catch (const PoleError& e) {
    throw SingularPointError(e.what());
  }
}

/// sigma_k(T) = sigma(T / k).
inline double sigma_k(const BallSpectrum& ball, int k, double T) {
  if (k < 1) throw DomainError("mode index k must be >= 1");
  detail::check_period(T);
  return sigma(ball, T / k).sigma;
}

/// Closed form of sigma for N = 1, with alpha = 9 pi^2 / 4 - (2 pi / T)^2.
inline double sigma_closed_form_1d(double T) {
  detail::check_period(T);
  const double pi = std::numbers::pi;
  if (std::abs(T - std::numbers::sqrt2) <= kSingularMargin * std::numbers::sqrt2)
    throw SingularPointError("sigma_closed_form_1d evaluated at T = sqrt(2)");
  const double kappa = 2.0 * pi / T;
  const double alpha = 9.0 * pi * pi / 4.0 - kappa * kappa;
  const double scale = 3.0 * std::sqrt(2.0 * pi) / 4.0;
  if (alpha < 0.0) {
    const double w = std::sqrt(-alpha);
    return -scale * w * std::tanh(w);
  }
  if (alpha == 0.0) return 0.0;
  const double w = std::sqrt(alpha);
  return scale * w * std::tan(w);
}

inline double sigma_prime(const BallSpectrum& ball, double T) {
  detail::check_period(T);
  const auto c = structural_constants(ball);
  if (near_singular(c, T)) throw SingularPointError("sigma_prime evaluated within the margin of delta");
  const Order nu(ball.nu);
  const double pi = std::numbers::pi;
  const double kappa = 2.0 * pi / T;
  const double scale = 4.0 * pi * pi * ball.dphi2;
  if (T == c.mu) return scale / (c.mu * c.mu * c.mu) / (ball.nu + 1.0);
  if (T < c.mu) {
    const double xi = std::sqrt(kappa * kappa - ball.lambda2);
    return scale * (1.0 - i_product_ratio(nu, xi)) / (T * T * T);
  }
  const double rho = std::sqrt(ball.lambda2 - kappa * kappa);
  try {
    return scale * (1.0 - j_product_ratio(nu, rho)) / (T * T * T);
  } catch (const PoleError& e) {
    throw SingularPointError(e.what());
  }
}

}  // namespace cylbif
