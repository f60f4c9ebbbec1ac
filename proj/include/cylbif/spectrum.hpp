#pragma once

// Radial Dirichlet spectrum of the unit ball in R^N and the second radial
// eigenfunction phi_2 with its boundary data.
//
// Eigenfunctions are stored as phi_k(r) = C_k g_k(r) with
//   g_k(r) = Gamma(nu+1) (j_k r / 2)^{-nu} J_nu(j_k r),   g_k(0) = 1,
// so C_k is the value at the axis. The scale is fixed by
//   |S^{N-1}| * int_0^1 phi_k(r)^2 r^{N-1} dr = 1 / (2 pi).

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include <json.hpp>

#include "cylbif/besselkit.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/quadrature.hpp"

namespace cylbif {

inline constexpr int kMinDimension = 1;
inline constexpr int kMaxDimension = 12;

struct BallSpectrum {
  int n = 0;
  double nu = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double j1 = 0.0;
  double j2 = 0.0;
  double dphi2 = 0.0;   // phi_2'(1)
  double d2phi2 = 0.0;  // phi_2''(1)
  double norm_const = 0.0;   // C_2
  double norm_const1 = 0.0;  // C_1
};

/// Surface measure of the unit sphere S^{N-1}; 2 for N = 1 (two endpoints).
inline double sphere_measure(int n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (n == 1) return 2.0;
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / gamma_fn(0.5 * n);
}

inline void check_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension)
    throw UnsupportedDimension("dimension N=" + std::to_string(n) + " outside [1, 12]");
}

/// g(r) = Gamma(nu+1) (j r / 2)^{-nu} J_nu(j r); equal to 1 at r = 0.
inline double unit_radial_profile(double nu, double j, double r) {
  return gamma_fn(nu + 1.0) * bessel_j_reduced(Order(nu), j * r);
}

/// d/dr of unit_radial_profile: -Gamma(nu+1) (j/2)^{-nu} j r^{-nu} J_{nu+1}(j r) in reduced form.
inline double unit_radial_profile_prime(double nu, double j, double r) {
  const double s = j * r;
  return -gamma_fn(nu + 1.0) * j * (0.5 * s) * bessel_j_reduced(Order(nu + 1.0), s);
}

/// C_k by adaptive quadrature of g_k^2 r^{N-1}.
inline double normalization_constant(int n, int k) {
  check_dimension(n);
  if (k != 1 && k != 2) throw DomainError("normalization_constant supports k = 1, 2");
  const double nu = 0.5 * (n - 2);
  const double j = bessel_zero(Order(nu), ZeroIndex(k));
  const auto integrand = [&](double r) {
    const double g = unit_radial_profile(nu, j, r);
    return g * g * std::pow(r, n - 1);
  };
  const double integral = adaptive_simpson(integrand, 0.0, 1.0, 1e-13);
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * sphere_measure(n) * integral);
}

inline BallSpectrum ball_spectrum(int n) {
  check_dimension(n);
  BallSpectrum b;
  b.n = n;
  b.nu = 0.5 * (n - 2);
  const Order nu(b.nu);
  b.j1 = bessel_zero(nu, ZeroIndex(1));
  b.j2 = bessel_zero(nu, ZeroIndex(2));
  b.lambda1 = b.j1 * b.j1;
  b.lambda2 = b.j2 * b.j2;
  b.norm_const1 = normalization_constant(n, 1);
  b.norm_const = normalization_constant(n, 2);
  // phi_2'(1) = C_2 Gamma(nu+1) (j_2/2)^{-nu} j_2 J_nu'(j_2)
  b.dphi2 = b.norm_const * gamma_fn(b.nu + 1.0) * std::pow(0.5 * b.j2, -b.nu) * b.j2 *
            bessel_j_prime(nu, b.j2);
  if (!(b.dphi2 > 0.0))
    throw Error("phi_2'(1) is not positive; Bessel sign conventions are inconsistent");
  b.d2phi2 = -(n - 1) * b.dphi2;
  return b;
}

/// phi_k(r) for k = 1, 2 and r in [0, 1].
inline double radial_eigenfunction(const BallSpectrum& ball, int k, double r) {
  if (k != 1 && k != 2) throw DomainError("radial_eigenfunction supports k = 1, 2");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radial_eigenfunction requires r in [0, 1]");
  const double j = (k == 1) ? ball.j1 : ball.j2;
  const double c = (k == 1) ? ball.norm_const1 : ball.norm_const;
  return c * unit_radial_profile(ball.nu, j, r);
}

inline double radial_eigenfunction_prime(const BallSpectrum& ball, int k, double r) {
  if (k != 1 && k != 2) throw DomainError("radial_eigenfunction_prime supports k = 1, 2");
  const double j = (k == 1) ? ball.j1 : ball.j2;
  const double c = (k == 1) ? ball.norm_const1 : ball.norm_const;
  return c * unit_radial_profile_prime(ball.nu, j, r);
}

struct ClosedFormMode {
  double eigenvalue;
  std::function<double(double)> eigenfunction;  // unnormalised
};

/// Exact modes for N = 1 (cosines) and N = 3 (sin(k pi r)/r).
inline ClosedFormMode closed_form_oracle(int n, int k) {
  if (k < 1) throw DomainError("mode index must be >= 1");
  const double pi = std::numbers::pi;
  if (n == 1) {
    const double w = (2 * k - 1) * pi / 2.0;
    return {w * w, [w](double r) { return std::cos(w * r); }};
  }
  if (n == 3) {
    const double w = k * pi;
    return {w * w, [w](double r) { return r == 0.0 ? w : std::sin(w * r) / r; }};
  }
  throw UnsupportedDimension("closed forms exist only for N = 1 and N = 3");
}

inline nlohmann::json to_json(const BallSpectrum& b) {
  return {{"n", b.n},           {"nu", b.nu},         {"lambda1", b.lambda1},
          {"lambda2", b.lambda2}, {"j1", b.j1},         {"j2", b.j2},
          {"dphi2", b.dphi2},   {"d2phi2", b.d2phi2}, {"norm_const", b.norm_const}};
}

}  // namespace cylbif
