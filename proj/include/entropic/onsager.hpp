#pragma once

// Linear irreversible thermodynamics: ydot = L Y with forces Y = dS/dy for a
// quadratic entropy S(y) = S_eq - y^T G y / 2, R = L^{-1}.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "entropic/errors.hpp"
#include "entropic/grid.hpp"
#include "entropic/rng.hpp"

namespace entropic::onsager {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline constexpr double kMaxCondition = 1e12;
inline constexpr double kSymmetryTolerance = 1e-12;

class OnsagerSystem {
 public:
  OnsagerSystem(MatrixXd kinetic, MatrixXd hessian, VectorXd y0)
      : l_(std::move(kinetic)), g_(std::move(hessian)), y0_(std::move(y0)) {
    const auto n = l_.rows();
    detail::require(n >= 1 && l_.cols() == n, "OnsagerSystem: L must be square");
    detail::require(g_.rows() == n && g_.cols() == n, "OnsagerSystem: G must match L");
    detail::require(y0_.size() == n, "OnsagerSystem: y0 must match L");
    detail::require(l_.allFinite() && g_.allFinite() && y0_.allFinite(), "OnsagerSystem: entries must be finite");

    detail::require((g_ - g_.transpose()).norm() <= kSymmetryTolerance * g_.norm(),
                    "OnsagerSystem: G must be symmetric");
    Eigen::LLT<MatrixXd> llt(g_);
    detail::require(llt.info() == Eigen::Success, "OnsagerSystem: G must be positive definite");
    g_factor_ = llt.matrixL();

    Eigen::JacobiSVD<MatrixXd> svd(l_);
    const auto& sv = svd.singularValues();
    detail::require(sv(n - 1) > 0.0 && sv(0) / sv(n - 1) <= kMaxCondition,
                    "OnsagerSystem: L is singular or too ill-conditioned to invert");
    r_ = l_.inverse();
  }

  Eigen::Index dim() const { return l_.rows(); }
  const MatrixXd& L() const { return l_; }
  const MatrixXd& R() const { return r_; }
  const MatrixXd& G() const { return g_; }
  const VectorXd& y0() const { return y0_; }
  // lower Cholesky factor of G
  const MatrixXd& g_factor() const { return g_factor_; }

 private:
  MatrixXd l_;
  MatrixXd g_;
  VectorXd y0_;
  MatrixXd r_;
  MatrixXd g_factor_;
};

// Y = -G y.
inline VectorXd forces(const OnsagerSystem& sys, const VectorXd& y) {
  detail::require(y.size() == sys.dim(), "forces: dimension mismatch");
  return -sys.G() * y;
}

// S(y) - S_eq.
inline double entropy_deficit(const OnsagerSystem& sys, const VectorXd& y) {
  detail::require(y.size() == sys.dim(), "entropy: dimension mismatch");
  return -0.5 * y.dot(sys.G() * y);
}

struct EntropyRate {
  double via_velocities;  // ydot^T R ydot
  double via_forces;      // Y^T L Y
};

inline EntropyRate entropy_rate(const OnsagerSystem& sys, const VectorXd& y) {
  const VectorXd f = forces(sys, y);
  const VectorXd v = sys.L() * f;
  return {v.dot(sys.R() * v), f.dot(sys.L() * f)};
}

// (ydot^T R ydot + Y^T L Y) / 2, the harmonic form of the entropy production.
inline double harmonic_hamiltonian(const OnsagerSystem& sys, const VectorXd& y) {
  const auto rate = entropy_rate(sys, y);
  return 0.5 * (rate.via_velocities + rate.via_forces);
}

struct Reciprocity {
  bool symmetric;
  double asymmetry_norm;  // ||L - L^T|| / ||L|| (Frobenius)
};

inline Reciprocity reciprocity_check(const MatrixXd& l) {
  detail::require(l.rows() >= 1 && l.rows() == l.cols(), "reciprocity_check: L must be square");
  const double scale = l.norm();
  const double asym = scale > 0.0 ? (l - l.transpose()).norm() / scale : 0.0;
  return {asym <= kSymmetryTolerance, asym};
}

// t' = i t
inline std::complex<double> wick_map(double t) { return {0.0, t}; }

struct OnsagerTrajectory {
  std::vector<double> tprimes;
  std::vector<VectorXd> ys;
  std::vector<double> entropy_rates;  // Y^T L Y along the path
  std::vector<double> entropies;      // S - S_eq

  std::size_t size() const { return tprimes.size(); }
};

// Exact solution of ydot = -L G y.
//
// Symmetric L: with G = C C^T, z = C^T y obeys zdot = -(C^T L C) z and
// C^T L C is symmetric, so a real symmetric eigensolve suffices.
// Otherwise L G is diagonalised over the complex numbers; a defective or
// badly conditioned eigenbasis is reported as a numerical failure.
inline OnsagerTrajectory relax(const OnsagerSystem& sys, const std::vector<double>& tprime_grid) {
  detail::require_grid_from_zero(tprime_grid, "relax");
  const auto n = sys.dim();
  OnsagerTrajectory traj;
  traj.tprimes = tprime_grid;

  std::function<VectorXd(double)> solution;
  if (reciprocity_check(sys.L()).symmetric) {
    const MatrixXd& c = sys.g_factor();
    const MatrixXd m = c.transpose() * sys.L() * c;
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(0.5 * (m + m.transpose()));
    if (eig.info() != Eigen::Success) throw NumericalError("relax: eigensolver failed");
    const VectorXd z0 = eig.eigenvectors().transpose() * (c.transpose() * sys.y0());
    const MatrixXd back = c.transpose().triangularView<Eigen::Upper>().solve(eig.eigenvectors());
    solution = [=, lambdas = eig.eigenvalues()](double t) -> VectorXd {
      return back * (z0.array() * (-lambdas.array() * t).exp()).matrix();
    };
  } else {
    const MatrixXd a = sys.L() * sys.G();
    Eigen::EigenSolver<MatrixXd> eig(a);
    if (eig.info() != Eigen::Success) throw NumericalError("relax: eigensolver failed");
    const Eigen::MatrixXcd v = eig.eigenvectors();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v);
    const auto& sv = svd.singularValues();
    if (!(sv(n - 1) > 0.0) || sv(0) / sv(n - 1) > 1e8) {
      throw NumericalError("relax: L G has a defective or ill-conditioned eigenbasis");
    }
    const Eigen::VectorXcd c0 = v.partialPivLu().solve(sys.y0().cast<std::complex<double>>());
    solution = [=, lambdas = eig.eigenvalues()](double t) -> VectorXd {
      return (v * (c0.array() * (-lambdas.array() * t).exp()).matrix()).real();
    };
  }

  for (double t : tprime_grid) {
    VectorXd y = solution(t);
    if (!y.allFinite()) throw NumericalError("relax: solution overflowed");
    const VectorXd f = forces(sys, y);
    traj.entropy_rates.push_back(f.dot(sys.L() * f));
    traj.entropies.push_back(entropy_deficit(sys, y));
    traj.ys.push_back(std::move(y));
  }
  return traj;
}

// Smallest eigenvalue of the symmetric part of L G: ||y(t')|| <= ||y0|| e^{-lambda t'}.
inline double lyapunov_rate(const OnsagerSystem& sys) {
  const MatrixXd a = sys.L() * sys.G();
  return Eigen::SelfAdjointEigenSolver<MatrixXd>(0.5 * (a + a.transpose()), Eigen::EigenvaluesOnly).eigenvalues()(0);
}

// Random SPD matrix A^T A / n + shift I.
inline MatrixXd random_spd(Eigen::Index n, rng::NormalStream& g, double shift = 0.1) {
  MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = g.next();
  MatrixXd m = a.transpose() * a / double(n) + shift * MatrixXd::Identity(n, n);
  return 0.5 * (m + m.transpose());
}

// SPD L and G with a normal y0, fully determined by (seed, index).
inline OnsagerSystem random_system(Eigen::Index n, std::uint64_t seed, std::uint64_t index) {
  rng::NormalStream g(seed, 0x0a5a9e00ULL + index);
  MatrixXd l = random_spd(n, g);
  MatrixXd gm = random_spd(n, g);
  VectorXd y0(n);
  for (Eigen::Index i = 0; i < n; ++i) y0(i) = g.next();
  return OnsagerSystem(std::move(l), std::move(gm), std::move(y0));
}

}  // namespace entropic::onsager
