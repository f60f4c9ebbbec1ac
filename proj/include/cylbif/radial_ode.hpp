#pragma once

// Shooting oracle for sigma_k(T). The regular solution of
//   y'' + (N-1)/r y' + alpha y = 0,   y(0) = 1, y'(0) = 0,
// with alpha = lambda_2 - (2 k pi / T)^2 gives c_k(r) = -phi_2'(1) y(r) / y(1)
// and sigma_k(T) = c_k'(1) + phi_2''(1). No Bessel ratio enters.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cylbif/errors.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif {

struct ShootOptions {
  double r0 = 0.01;
  double h = 1e-4;
  double resonance_tol = 1e-8;
};

/// (y, y') of the even power series at r0.
inline std::pair<double, double> series_start(int n, double alpha, double r0) {
  if (!(r0 > 0.0 && r0 <= 0.05)) throw DomainError("series_start requires 0 < r0 <= 0.05");
  double a = 1.0;
  double y = 1.0;
  double dy = 0.0;
  const double r2 = r0 * r0;
  double pw = 1.0;  // r0^{2m}
  for (int m = 0; m < 200; ++m) {
    a *= -alpha / ((2.0 * m + 2.0) * (2.0 * m + n));
    pw *= r2;
    const double term = a * pw;
    if (std::abs(term) < 1e-16 * std::max(1.0, std::abs(y)) || a == 0.0) break;
    y += term;
    dy += (2.0 * m + 2.0) * term / r0;
  }
  return {y, dy};
}

inline std::pair<double, double> series_start(const BallSpectrum& ball, double alpha, double r0) {
  return series_start(ball.n, alpha, r0);
}

/// Regular solution on [0, 1] with quintic Hermite dense output.
class RegularSolution {
 public:
  RegularSolution(int n, double alpha, const ShootOptions& opt = {}) : n_(n), alpha_(alpha), r0_(opt.r0) {
    if (!(opt.h > 0.0)) throw DomainError("step size must be positive");
    const int steps = std::max(1, static_cast<int>(std::ceil((1.0 - r0_) / opt.h - 1e-9)));
    h_ = (1.0 - r0_) / steps;
    y_.resize(static_cast<std::size_t>(steps) + 1);
    dy_.resize(y_.size());
    auto [y, dy] = series_start(n, alpha, r0_);
    y_[0] = y;
    dy_[0] = dy;
    max_abs_ = std::abs(y);
    for (int i = 0; i < steps; ++i) {
      const double r = r0_ + i * h_;
      const auto f = [&](double rr, double u, double du) { return -(n_ - 1) / rr * du - alpha_ * u; };
      const double k1y = dy, k1v = f(r, y, dy);
      const double k2y = dy + 0.5 * h_ * k1v, k2v = f(r + 0.5 * h_, y + 0.5 * h_ * k1y, k2y);
      const double k3y = dy + 0.5 * h_ * k2v, k3v = f(r + 0.5 * h_, y + 0.5 * h_ * k2y, k3y);
      const double k4y = dy + h_ * k3v, k4v = f(r + h_, y + h_ * k3y, k4y);
      y += h_ / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
      dy += h_ / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      y_[static_cast<std::size_t>(i) + 1] = y;
      dy_[static_cast<std::size_t>(i) + 1] = dy;
      max_abs_ = std::max(max_abs_, std::abs(y));
    }
  }

  int dimension() const { return n_; }
  double alpha() const { return alpha_; }
  double y_at_1() const { return y_.back(); }
  double dy_at_1() const { return dy_.back(); }
  double max_abs() const { return max_abs_; }

  double value(double r) const { return eval(r).first; }
  double derivative(double r) const { return eval(r).second; }
  double second_derivative(double r) const {
    const auto [y, dy] = eval(r);
    if (r == 0.0) return -alpha_ * y / n_;
    return -(n_ - 1) / r * dy - alpha_ * y;
  }

 private:
  std::pair<double, double> eval(double r) const {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("regular solution evaluated outside [0, 1]");
    if (r <= r0_) {
      if (r == 0.0) return {1.0, 0.0};
      return series_start(n_, alpha_, r);
    }
    const auto idx = std::min(static_cast<std::size_t>((r - r0_) / h_), y_.size() - 2);
    const double a = r0_ + static_cast<double>(idx) * h_;
    const double b = a + h_;
    const double y0 = y_[idx], y1 = y_[idx + 1];
    const double d0 = dy_[idx], d1 = dy_[idx + 1];
    const double s0 = -(n_ - 1) / a * d0 - alpha_ * y0;
    const double s1 = -(n_ - 1) / b * d1 - alpha_ * y1;
    const double t = (r - a) / h_;
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double hh = h_ * h_;
    // Quintic Hermite basis on [0, 1].
    const double h00 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
    const double h10 = t - 6 * t3 + 8 * t4 - 3 * t5;
    const double h20 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
    const double h01 = 10 * t3 - 15 * t4 + 6 * t5;
    const double h11 = -4 * t3 + 7 * t4 - 3 * t5;
    const double h21 = 0.5 * (t3 - 2 * t4 + t5);
    const double d00 = -30 * t2 + 60 * t3 - 30 * t4;
    const double d10 = 1 - 18 * t2 + 32 * t3 - 15 * t4;
    const double d20 = 0.5 * (2 * t - 9 * t2 + 12 * t3 - 5 * t4);
    const double d01 = 30 * t2 - 60 * t3 + 30 * t4;
    const double d11 = -12 * t2 + 28 * t3 - 15 * t4;
    const double d21 = 0.5 * (3 * t2 - 8 * t3 + 5 * t4);
    const double y = h00 * y0 + h10 * h_ * d0 + h20 * hh * s0 + h01 * y1 + h11 * h_ * d1 + h21 * hh * s1;
    const double dy =
        (d00 * y0 + d10 * h_ * d0 + d20 * hh * s0 + d01 * y1 + d11 * h_ * d1 + d21 * hh * s1) / h_;
    return {y, dy};
  }

  int n_;
  double alpha_;
  double r0_;
  double h_ = 0.0;
  double max_abs_ = 0.0;
  std::vector<double> y_;
  std::vector<double> dy_;
};

struct ShootResult {
  double y_at_1;
  double dy_at_1;
  double c_prime_at_1;
  double sigma_value;
  bool resonant;
};

inline double shoot_alpha(const BallSpectrum& ball, int k, double T) {
  if (k < 1) throw DomainError("mode index k must be >= 1");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("period T must be positive and finite");
  const double kappa = 2.0 * k * std::numbers::pi / T;
  return ball.lambda2 - kappa * kappa;
}

/// Shoot without raising at resonance; `resonant` reports |y(1)| below the threshold.
inline ShootResult shoot_regular(const BallSpectrum& ball, int k, double T, const ShootOptions& opt = {}) {
  const RegularSolution sol(ball.n, shoot_alpha(ball, k, T), opt);
  ShootResult res{};
  res.y_at_1 = sol.y_at_1();
  res.dy_at_1 = sol.dy_at_1();
  res.resonant = std::abs(res.y_at_1) < opt.resonance_tol * sol.max_abs();
  res.c_prime_at_1 = -ball.dphi2 * res.dy_at_1 / res.y_at_1;
  res.sigma_value = res.c_prime_at_1 + ball.d2phi2;
  return res;
}

inline ShootResult shoot_c(const BallSpectrum& ball, int k, double T, const ShootOptions& opt = {}) {
  ShootResult res = shoot_regular(ball, k, T, opt);
  if (res.resonant)
    throw ResonanceError("regular solution vanishes at r = 1 (T=" + std::to_string(T) +
                         ", k=" + std::to_string(k) + ")");
  return res;
}

/// c_k(r) = -phi_2'(1) y(r) / y(1), with dense output.
class CProfile {
 public:
  CProfile(const BallSpectrum& ball, int k, double T, const ShootOptions& opt = {})
      : sol_(ball.n, shoot_alpha(ball, k, T), opt) {
    if (std::abs(sol_.y_at_1()) < opt.resonance_tol * sol_.max_abs())
      throw ResonanceError("c_k profile requested at a resonant period");
    scale_ = -ball.dphi2 / sol_.y_at_1();
  }
  double value(double r) const { return scale_ * sol_.value(r); }
  double derivative(double r) const { return scale_ * sol_.derivative(r); }

 private:
  RegularSolution sol_;
  double scale_;
};

/// psi(r, t) = sum_k c_k(r) a_k cos(2 k pi t / T) for a finite cosine series.
class PsiField {
 public:
  PsiField(const BallSpectrum& ball, double T, const std::vector<std::pair<int, double>>& coeffs,
           const ShootOptions& opt = {})
      : T_(T) {
    for (const auto& [k, a] : coeffs) terms_.push_back({k, a, CProfile(ball, k, T, opt)});
  }

  double value(double r, double t) const {
    double s = 0.0;
    for (const auto& term : terms_)
      s += term.profile.value(r) * term.a * std::cos(2.0 * term.k * std::numbers::pi * t / T_);
    return s;
  }
  double radial_derivative(double r, double t) const {
    double s = 0.0;
    for (const auto& term : terms_)
      s += term.profile.derivative(r) * term.a * std::cos(2.0 * term.k * std::numbers::pi * t / T_);
    return s;
  }

 private:
  struct Term {
    int k;
    double a;
    CProfile profile;
  };
  double T_;
  std::vector<Term> terms_;
};

}  // namespace cylbif
