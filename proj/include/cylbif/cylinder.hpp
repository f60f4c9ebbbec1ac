#pragma once

// Second Dirichlet eigenpair of the Laplacian on an axisymmetric perturbed
// cylinder {(x, t) : |x| < R(2 pi t / T)}, R = 1 + v, v(theta) = sum a_k cos(k theta),
// and the Neumann deviation F(v, T) of that eigenfunction along the boundary.
//
// The domain is mapped to the rectangle rho = r / R(theta) in [0, 1],
// theta = 2 pi t / T in [0, 2 pi). With kappa = 2 pi / T the Dirichlet energy
// and mass become (up to the common factor 1/kappa)
//   E = int [ (1 + kappa^2 rho^2 R'^2) / R^2 w_rho^2 - 2 kappa^2 rho R'/R w_rho w_theta
//             + kappa^2 w_theta^2 ] rho^{N-1} R^N drho dtheta,
//   M = int w^2 rho^{N-1} R^N drho dtheta.
// Radially: vertex-centred finite volumes (linear profiles between nodes,
// lumped dual-cell mass); the axis node carries the cell [0, drho/2], which
// is the natural regularity condition for every N (evenness for N = 1).
// In theta: trigonometric interpolation, with theta derivatives evaluated at
// the staggered half points. The resulting symmetric block-tridiagonal
// pencil is solved by shift-invert subspace iteration.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cylbif/dispersion.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif {

struct CylinderProblem {
  int n = 1;
  double T = 1.0;
  std::vector<std::pair<int, double>> v_coeffs;  // (k, a_k)
  int n_r = 64;
  int n_t = 16;

  double radius(double theta) const {
    double r = 1.0;
    for (const auto& [k, a] : v_coeffs) r += a * std::cos(k * theta);
    return r;
  }
  double radius_prime(double theta) const {
    double d = 0.0;
    for (const auto& [k, a] : v_coeffs) d -= a * k * std::sin(k * theta);
    return d;
  }
};

inline void validate(const CylinderProblem& p) {
  check_dimension(p.n);
  if (!(p.T > 0.0) || !std::isfinite(p.T)) throw DomainError("period T must be positive and finite");
  if (p.n_r < 64) throw DomainError("n_r must be >= 64");
  if (p.n_t < 16 || p.n_t % 2 != 0) throw DomainError("n_t must be even and >= 16");
  for (const auto& [k, a] : p.v_coeffs) {
    if (k < 1) throw DomainError("perturbation modes must have k >= 1 (even, mean-zero v)");
    if (!std::isfinite(a)) throw DomainError("perturbation coefficient must be finite");
  }
  constexpr int kProbe = 4096;
  for (int i = 0; i < kProbe; ++i) {
    if (!(p.radius(2.0 * std::numbers::pi * i / kProbe) > 0.0))
      throw DomainError("perturbation violates 1 + v > 0");
  }
}

namespace detail {

/// Trigonometric interpolation from nodes theta_l = l h to half points
/// theta_{j+1/2}: values (first) and derivatives (second). h = 2 pi / m, m even.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> half_point_operators(int m) {
  Eigen::MatrixXd P(m, m);
  Eigen::MatrixXd D(m, m);
  const double h = 2.0 * std::numbers::pi / m;
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < m; ++l) {
      const int k = j - l;
      const double sign = (((k % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
      const double x = 0.5 * (k + 0.5) * h;
      P(j, l) = sign * std::cos(x) / std::sin(x) / m;
      D(j, l) = -sign / (2.0 * m * std::sin(x) * std::sin(x));
    }
  }
  return {P, D};
}

/// LU factorisation of a symmetric block-tridiagonal matrix minus a shift.
/// diag[i] are the diagonal blocks, upper[i] the (i, i+1) blocks.
class BlockTridiagonalLU {
 public:
  BlockTridiagonalLU(const std::vector<Eigen::MatrixXd>& diag, const std::vector<Eigen::MatrixXd>& upper,
                     double shift)
      : upper_(&upper) {
    const std::size_t n = diag.size();
    const Eigen::Index b = diag.front().rows();
    lu_.reserve(n);
    w_.reserve(n);
    Eigen::MatrixXd s = diag[0] - shift * Eigen::MatrixXd::Identity(b, b);
    for (std::size_t i = 0; i < n; ++i) {
      lu_.emplace_back(s);
      if (i + 1 < n) {
        w_.push_back(lu_.back().solve(upper[i]));
        s = diag[i + 1] - shift * Eigen::MatrixXd::Identity(b, b) - upper[i].transpose() * w_.back();
      }
    }
    for (const auto& f : lu_) {
      if (!std::isfinite(f.rcond()) || f.rcond() < 1e-14)
        throw ConvergenceError("shifted operator is numerically singular");
    }
  }

  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const {
    const std::size_t n = lu_.size();
    const Eigen::Index b = lu_.front().rows();
    Eigen::MatrixXd y(rhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::MatrixXd z = rhs.middleRows(static_cast<Eigen::Index>(i) * b, b);
      if (i > 0) z -= (*upper_)[i - 1].transpose() * y.middleRows(static_cast<Eigen::Index>(i - 1) * b, b);
      y.middleRows(static_cast<Eigen::Index>(i) * b, b) = lu_[i].solve(z);
    }
    for (std::size_t i = n - 1; i-- > 0;) {
      y.middleRows(static_cast<Eigen::Index>(i) * b, b) -= w_[i] * y.middleRows(static_cast<Eigen::Index>(i + 1) * b, b);
    }
    return y;
  }

 private:
  const std::vector<Eigen::MatrixXd>* upper_;
  std::vector<Eigen::PartialPivLU<Eigen::MatrixXd>> lu_;
  std::vector<Eigen::MatrixXd> w_;
};

}  // namespace detail

/// Discrete energy (stiffness) and lumped mass of a CylinderProblem.
/// Unknowns are ordered radial-node-major: index i * n_t + j for rho_i, theta_j;
/// the boundary row rho = 1 is eliminated (Dirichlet).
class CylinderOperator {
 public:
  explicit CylinderOperator(const CylinderProblem& p) : p_(p) {
    validate(p);
    const int nr = p.n_r, nt = p.n_t, N = p.n;
    dr_ = 1.0 / nr;
    dth_ = 2.0 * std::numbers::pi / nt;
    kappa_ = 2.0 * std::numbers::pi / p.T;
    rho_.resize(static_cast<std::size_t>(nr) + 1);
    for (int i = 0; i <= nr; ++i) rho_[static_cast<std::size_t>(i)] = i * dr_;
    theta_.resize(static_cast<std::size_t>(nt));
    for (int j = 0; j < nt; ++j) theta_[static_cast<std::size_t>(j)] = j * dth_;

    auto [P, Ds] = detail::half_point_operators(nt);
    Eigen::VectorXd R(nt), Rp(nt), Rh(nt), Rph(nt);
    for (int j = 0; j < nt; ++j) {
      R(j) = p.radius(j * dth_);
      Rp(j) = p.radius_prime(j * dth_);
      Rh(j) = p.radius((j + 0.5) * dth_);
      Rph(j) = p.radius_prime((j + 0.5) * dth_);
    }
    const auto moment = [&](double a, double b, int power) {
      return (std::pow(b, power) - std::pow(a, power)) / power;
    };

    diag_.assign(static_cast<std::size_t>(nr), Eigen::MatrixXd::Zero(nt, nt));
    upper_.assign(static_cast<std::size_t>(nr - 1), Eigen::MatrixXd::Zero(nt, nt));
    mass_.resize(static_cast<Eigen::Index>(nr) * nt);

    const double k2 = kappa_ * kappa_;
    // theta-theta form at half points; shared by all radial nodes up to the cell measure.
    Eigen::MatrixXd theta_form = Ds.transpose() * (dth_ * Rh.array().pow(N)).matrix().asDiagonal() * Ds;

    for (int i = 0; i < nr; ++i) {
      const double a = rho_[static_cast<std::size_t>(i)];
      const double b = rho_[static_cast<std::size_t>(i) + 1];
      const double v0 = moment(a, b, N);          // int rho^{N-1}
      const double v1 = moment(a, b, N + 1);      // int rho^N
      const double v2 = moment(a, b, N + 2);      // int rho^{N+1}
      Eigen::VectorXd adiag(nt);
      for (int j = 0; j < nt; ++j)
        adiag(j) = dth_ * std::pow(R(j), N - 2) * (v0 + k2 * Rp(j) * Rp(j) * v2) / (dr_ * dr_);
      Eigen::VectorXd bw(nt);
      for (int j = 0; j < nt; ++j) bw(j) = (v1 / dr_) * Rph(j) * std::pow(Rh(j), N - 1);
      const Eigen::MatrixXd Q = -k2 * dth_ * P.transpose() * bw.asDiagonal() * Ds;
      const Eigen::MatrixXd symQ = 0.5 * (Q + Q.transpose());
      const Eigen::MatrixXd A = adiag.asDiagonal();
      diag_[static_cast<std::size_t>(i)] += A - symQ;
      if (i + 1 < nr) {
        diag_[static_cast<std::size_t>(i) + 1] += A + symQ;
        upper_[static_cast<std::size_t>(i)] += -A + 0.5 * (Q.transpose() - Q);
      }
      // Dual cell of node i.
      const double lo = std::max(0.0, a - 0.5 * dr_);
      const double cell = moment(lo, a + 0.5 * dr_, N);
      diag_[static_cast<std::size_t>(i)] += k2 * cell * theta_form;
      for (int j = 0; j < nt; ++j)
        mass_(static_cast<Eigen::Index>(i) * nt + j) = cell * std::pow(R(j), N) * dth_;
    }
  }

  const CylinderProblem& problem() const { return p_; }
  int size() const { return p_.n_r * p_.n_t; }
  double dr() const { return dr_; }
  double dtheta() const { return dth_; }
  double kappa() const { return kappa_; }
  const std::vector<double>& rho() const { return rho_; }
  const std::vector<double>& theta() const { return theta_; }
  const std::vector<Eigen::MatrixXd>& diag_blocks() const { return diag_; }
  const std::vector<Eigen::MatrixXd>& upper_blocks() const { return upper_; }
  const Eigen::VectorXd& mass() const { return mass_; }

  /// Dense stiffness matrix; for small grids and tests.
  Eigen::MatrixXd dense_stiffness() const {
    const int nt = p_.n_t;
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(size(), size());
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      const auto o = static_cast<Eigen::Index>(i) * nt;
      K.block(o, o, nt, nt) = diag_[i];
      if (i + 1 < diag_.size()) {
        K.block(o, o + nt, nt, nt) = upper_[i];
        K.block(o + nt, o, nt, nt) = upper_[i].transpose();
      }
    }
    return K;
  }

  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const {
    const int nt = p_.n_t;
    Eigen::MatrixXd y(x.rows(), x.cols());
    const std::size_t n = diag_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto o = static_cast<Eigen::Index>(i) * nt;
      Eigen::MatrixXd yi = diag_[i] * x.middleRows(o, nt);
      if (i + 1 < n) yi += upper_[i] * x.middleRows(o + nt, nt);
      if (i > 0) yi += upper_[i - 1].transpose() * x.middleRows(o - nt, nt);
      y.middleRows(o, nt) = yi;
    }
    return y;
  }

 private:
  CylinderProblem p_;
  double dr_ = 0.0, dth_ = 0.0, kappa_ = 0.0;
  std::vector<double> rho_, theta_;
  std::vector<Eigen::MatrixXd> diag_, upper_;
  Eigen::VectorXd mass_;
};

struct EigenSolveResult {
  double lambda2v = 0.0;
  std::vector<double> rho;                          // n_r + 1 mapped radii
  std::vector<double> theta;                        // n_t angles
  Eigen::MatrixXd u_grid;                           // (n_r + 1) x n_t, last row zero
  std::vector<std::pair<double, double>> flux;      // (t, normal derivative)
  std::vector<std::pair<double, double>> F_samples; // (t, F(v, T)(t))
  std::vector<std::pair<double, double>> nodal_radius;  // (t, r(t)); empty if not unique
  double residual_norm = 0.0;
  double lambda1v = 0.0;
};

struct EigenSolveOptions {
  int block_size = 4;
  int max_iterations = 400;
  double tolerance = 1e-12;
  double shift_factor = 0.95;
};

namespace detail {

inline void fill_boundary_data(EigenSolveResult& res, const CylinderProblem& p, double kappa);
inline std::optional<std::vector<std::pair<double, double>>> nodal_curve(const EigenSolveResult& res,
                                                                         const CylinderProblem& p,
                                                                         std::string* why);

}  // namespace detail

inline EigenSolveResult solve_lambda2(const CylinderProblem& p, const EigenSolveOptions& opt = {}) {
  const CylinderOperator op(p);
  const BallSpectrum ball = ball_spectrum(p.n);
  const int nt = p.n_t, nr = p.n_r;
  const Eigen::Index n = op.size();

  // Symmetric form B = M^{-1/2} K M^{-1/2}.
  const Eigen::VectorXd scale = op.mass().cwiseSqrt().cwiseInverse();
  std::vector<Eigen::MatrixXd> diag = op.diag_blocks();
  std::vector<Eigen::MatrixXd> upper = op.upper_blocks();
  for (int i = 0; i < nr; ++i) {
    const Eigen::VectorXd si = scale.segment(static_cast<Eigen::Index>(i) * nt, nt);
    diag[static_cast<std::size_t>(i)] = si.asDiagonal() * diag[static_cast<std::size_t>(i)] * si.asDiagonal();
    if (i + 1 < nr) {
      const Eigen::VectorXd sn = scale.segment(static_cast<Eigen::Index>(i + 1) * nt, nt);
      upper[static_cast<std::size_t>(i)] = si.asDiagonal() * upper[static_cast<std::size_t>(i)] * sn.asDiagonal();
    }
  }
  const auto applyB = [&](const Eigen::MatrixXd& x) {
    Eigen::MatrixXd y(x.rows(), x.cols());
    for (int i = 0; i < nr; ++i) {
      const auto o = static_cast<Eigen::Index>(i) * nt;
      Eigen::MatrixXd yi = diag[static_cast<std::size_t>(i)] * x.middleRows(o, nt);
      if (i + 1 < nr) yi += upper[static_cast<std::size_t>(i)] * x.middleRows(o + nt, nt);
      if (i > 0) yi += upper[static_cast<std::size_t>(i - 1)].transpose() * x.middleRows(o - nt, nt);
      y.middleRows(o, nt) = yi;
    }
    return y;
  };

  // Reference profiles in the mapped variable, in B coordinates.
  Eigen::VectorXd ref1(n), ref2(n);
  for (int i = 0; i < nr; ++i) {
    const double r = op.rho()[static_cast<std::size_t>(i)];
    const double f1 = radial_eigenfunction(ball, 1, r);
    const double f2 = radial_eigenfunction(ball, 2, r);
    for (int j = 0; j < nt; ++j) {
      const Eigen::Index idx = static_cast<Eigen::Index>(i) * nt + j;
      ref1(idx) = f1 / scale(idx);
      ref2(idx) = f2 / scale(idx);
    }
  }
  ref1.normalize();
  ref2.normalize();

  // Ground state by inverse iteration.
  const detail::BlockTridiagonalLU lu0(diag, upper, 0.0);
  Eigen::VectorXd g = ref1;
  double lambda1 = 0.0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    g = lu0.solve(g);
    g.normalize();
    const Eigen::VectorXd Bg = applyB(g);
    lambda1 = g.dot(Bg);
    if ((Bg - lambda1 * g).norm() <= opt.tolerance * lambda1) break;
  }

  // Block shift-invert iteration near lambda_2 with the ground state deflated.
  const double shift = opt.shift_factor * ball.lambda2;
  const detail::BlockTridiagonalLU lu(diag, upper, shift);
  const int pb = std::max(1, opt.block_size);
  Eigen::MatrixXd X(n, pb);
  for (int c = 0; c < pb; ++c) {
    for (int i = 0; i < nr; ++i) {
      for (int j = 0; j < nt; ++j) {
        const Eigen::Index idx = static_cast<Eigen::Index>(i) * nt + j;
        const double th = op.theta()[static_cast<std::size_t>(j)];
        switch (c % 4) {
          case 0: X(idx, c) = ref2(idx); break;
          case 1: X(idx, c) = ref1(idx) * std::cos(th); break;
          case 2: X(idx, c) = ref2(idx) * std::cos(th); break;
          default: X(idx, c) = ref2(idx) * std::cos((c / 4 + 2) * th) + 1e-3 * ref1(idx); break;
        }
      }
    }
  }
  Eigen::VectorXd best;
  double theta_best = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  double best_residual = residual;
  int since_improved = 0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    Eigen::MatrixXd Y = lu.solve(X);
    Y -= g * (g.transpose() * Y);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Y);
    X = qr.householderQ() * Eigen::MatrixXd::Identity(n, pb);
    X -= g * (g.transpose() * X);
    Eigen::MatrixXd BX = applyB(X);
    Eigen::MatrixXd H = X.transpose() * BX;
    H = 0.5 * (H + H.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    X = X * es.eigenvectors();
    BX = BX * es.eigenvectors();
    Eigen::Index pick = 0;
    double overlap = -1.0;
    for (Eigen::Index c = 0; c < pb; ++c) {
      const double o = std::abs(ref2.dot(X.col(c)));
      if (o > overlap) {
        overlap = o;
        pick = c;
      }
    }
    const double th = es.eigenvalues()(pick);
    residual = (BX.col(pick) - th * X.col(pick)).norm() / std::abs(th);
    if (residual < best_residual * 0.9) {
      best_residual = residual;
      since_improved = 0;
    } else {
      ++since_improved;
    }
    best = X.col(pick);
    theta_best = th;
    if (residual <= opt.tolerance || (since_improved > 20 && residual < 1e-9)) break;
  }
  if (!(residual <= 1e-8))
    throw ConvergenceError("eigen iteration stagnated (relative residual " + std::to_string(residual) + ")");

  EigenSolveResult res;
  res.lambda2v = theta_best;
  res.lambda1v = lambda1;
  res.residual_norm = residual;
  res.rho = op.rho();
  res.theta = op.theta();
  // Physical nodal values with omega * w^T M w = 1 and a positive axis value.
  Eigen::VectorXd w = scale.cwiseProduct(best) / std::sqrt(sphere_measure(p.n));
  if (w.head(nt).sum() < 0.0) w = -w;
  res.u_grid = Eigen::MatrixXd::Zero(nr + 1, nt);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nt; ++j) res.u_grid(i, j) = w(static_cast<Eigen::Index>(i) * nt + j);
  detail::fill_boundary_data(res, p, op.kappa());
  if (auto curve = detail::nodal_curve(res, p, nullptr)) res.nodal_radius = std::move(*curve);
  return res;
}

namespace detail {

inline void fill_boundary_data(EigenSolveResult& res, const CylinderProblem& p, double kappa) {
  const int nr = p.n_r, nt = p.n_t;
  const double dr = 1.0 / nr;
  res.flux.clear();
  res.F_samples.clear();
  std::vector<double> weight(static_cast<std::size_t>(nt));
  double wsum = 0.0, fsum = 0.0;
  for (int j = 0; j < nt; ++j) {
    const double th = res.theta[static_cast<std::size_t>(j)];
    const double R = p.radius(th);
    const double Rp = p.radius_prime(th);
    const double stretch = std::sqrt(1.0 + kappa * kappa * Rp * Rp);
    // One-sided third-order derivative at rho = 1, where w = 0.
    const double w_rho = (11.0 * res.u_grid(nr, j) - 18.0 * res.u_grid(nr - 1, j) + 9.0 * res.u_grid(nr - 2, j) -
                          2.0 * res.u_grid(nr - 3, j)) /
                         (6.0 * dr);
    const double flux = w_rho / R * stretch;
    res.flux.emplace_back(th / kappa, flux);
    weight[static_cast<std::size_t>(j)] = std::pow(R, p.n - 1) * stretch;
    wsum += weight[static_cast<std::size_t>(j)];
    fsum += weight[static_cast<std::size_t>(j)] * flux;
  }
  const double mean = fsum / wsum;
  for (const auto& [t, f] : res.flux) res.F_samples.emplace_back(t, f - mean);
}

inline std::optional<std::vector<std::pair<double, double>>> nodal_curve(const EigenSolveResult& res,
                                                                         const CylinderProblem& p,
                                                                         std::string* why) {
  const int nr = p.n_r, nt = p.n_t;
  const double kappa = 2.0 * std::numbers::pi / p.T;
  std::vector<std::pair<double, double>> out;
  for (int j = 0; j < nt; ++j) {
    int count = 0;
    int at = -1;
    for (int i = 0; i + 1 < nr; ++i) {
      const double a = res.u_grid(i, j), b = res.u_grid(i + 1, j);
      if ((a > 0.0 && b <= 0.0) || (a < 0.0 && b >= 0.0)) {
        ++count;
        at = i;
      }
    }
    if (count != 1) {
      if (why) *why = "column " + std::to_string(j) + " has " + std::to_string(count) + " sign changes";
      return std::nullopt;
    }
    // Cubic through four neighbouring nodes, then bisection on [rho_at, rho_at+1].
    const int s = std::clamp(at - 1, 0, nr - 3);
    double xs[4], ys[4];
    for (int q = 0; q < 4; ++q) {
      xs[q] = res.rho[static_cast<std::size_t>(s + q)];
      ys[q] = res.u_grid(s + q, j);
    }
    const auto cubic = [&](double x) {
      double sum = 0.0;
      for (int q = 0; q < 4; ++q) {
        double l = 1.0;
        for (int m = 0; m < 4; ++m)
          if (m != q) l *= (x - xs[m]) / (xs[q] - xs[m]);
        sum += ys[q] * l;
      }
      return sum;
    };
    double lo = res.rho[static_cast<std::size_t>(at)], hi = res.rho[static_cast<std::size_t>(at) + 1];
    double flo = cubic(lo);
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = cubic(mid);
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    const double th = res.theta[static_cast<std::size_t>(j)];
    out.emplace_back(th / kappa, 0.5 * (lo + hi) * p.radius(th));
  }
  return out;
}

}  // namespace detail

/// F(v, T) samples along the boundary: normal derivative minus its boundary-measure mean.
inline std::vector<std::pair<double, double>> neumann_deviation(const EigenSolveResult& result,
                                                                const CylinderProblem& problem) {
  if (!(result.residual_norm <= 1e-6)) throw ConvergenceError("eigenpair residual too large for flux evaluation");
  EigenSolveResult copy = result;
  detail::fill_boundary_data(copy, problem, 2.0 * std::numbers::pi / problem.T);
  return copy.F_samples;
}

/// Unique interior zero r(t) of the eigenfunction in each theta column.
inline std::vector<std::pair<double, double>> nodal_line(const EigenSolveResult& result,
                                                         const CylinderProblem& problem) {
  std::string why;
  auto curve = detail::nodal_curve(result, problem, &why);
  if (!curve) throw NodalCountError("nodal line is not unique: " + why);
  return *curve;
}

/// Cosine coefficient of mode k of samples on the uniform theta grid.
inline double cosine_mode(const std::vector<std::pair<double, double>>& samples, int k) {
  const int m = static_cast<int>(samples.size());
  double s = 0.0;
  for (int j = 0; j < m; ++j) s += samples[static_cast<std::size_t>(j)].second * std::cos(2.0 * std::numbers::pi * k * j / m);
  return (k == 0 || 2 * k == m ? 1.0 : 2.0) * s / m;
}

struct LinearizationResult {
  double error = 0.0;          // relative sup error, or absolute when sigma_k ~ 0
  bool absolute = false;
  double sigma_k = 0.0;
  double mode_amplitude = 0.0; // cosine coefficient of mode k of F / eps
  double purity = 0.0;         // energy of other modes / energy of mode k
  EigenSolveResult solve;
};

inline LinearizationResult linearization_check(const BallSpectrum& ball, double T, int k, double epsilon,
                                               int n_r, int n_t, const EigenSolveOptions& opt = {}) {
  if (k < 1) throw DomainError("mode index k must be >= 1");
  if (!(epsilon != 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be finite and nonzero");
  CylinderProblem p;
  p.n = ball.n;
  p.T = T;
  p.v_coeffs = {{k, epsilon}};
  p.n_r = n_r;
  p.n_t = n_t;
  LinearizationResult out;
  out.sigma_k = sigma_k(ball, k, T);
  out.solve = solve_lambda2(p, opt);
  const auto F = neumann_deviation(out.solve, p);
  std::vector<std::pair<double, double>> scaled;
  for (const auto& [t, f] : F) scaled.emplace_back(t, f / epsilon);
  out.mode_amplitude = cosine_mode(scaled, k);
  double sup = 0.0;
  for (int j = 0; j < n_t; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n_t;
    sup = std::max(sup, std::abs(scaled[static_cast<std::size_t>(j)].second - out.sigma_k * std::cos(k * th)));
  }
  out.absolute = std::abs(out.sigma_k) < 1e-6 * (1.0 + ball.dphi2);
  out.error = out.absolute ? sup : sup / std::abs(out.sigma_k);
  double other = 0.0;
  for (int m = 0; m <= n_t / 2; ++m) {
    if (m == k) continue;
    const double a = cosine_mode(scaled, m);
    other += a * a;
  }
  out.purity = other / (out.mode_amplitude * out.mode_amplitude);
  return out;
}

}  // namespace cylbif
