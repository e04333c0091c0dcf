#pragma once

// Dense Hermitian operator core: construction, spectral decomposition,
// exact exponentials of constant generators, expectations, uncertainties.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entropic/errors.hpp"
#include "entropic/rng.hpp"

namespace entropic {

using Complex = std::complex<double>;
using Index = Eigen::Index;

// Physical constants carried explicitly through every formula. Natural units
// by default; inject SI values to run in SI.
struct Constants {
  double hbar = 1.0;  // J s
  double kB = 1.0;    // J/K

  void validate() const {
    detail::require(std::isfinite(hbar) && hbar > 0.0, "Constants: hbar must be finite and > 0");
    detail::require(std::isfinite(kB) && kB > 0.0, "Constants: kB must be finite and > 0");
  }
};

enum class Unit { energy, entropy, dimensionless };

inline std::string_view to_string(Unit u) {
  switch (u) {
    case Unit::energy: return "energy";
    case Unit::entropy: return "entropy";
    case Unit::dimensionless: return "dimensionless";
  }
  return "unknown";
}

inline constexpr double kHermiticityTolerance = 1e-12;

// A self-adjoint dense matrix with a unit label. Construction rejects
// matrices that are not Hermitian to within 1e-12 relative (Frobenius) rather
// than symmetrizing them.
class HermitianOperator {
 public:
  explicit HermitianOperator(Eigen::MatrixXcd entries, Unit unit = Unit::energy)
      : entries_(std::move(entries)), unit_(unit) {
    detail::require(entries_.rows() >= 1, "HermitianOperator: dimension must be >= 1");
    detail::require(entries_.rows() == entries_.cols(), "HermitianOperator: matrix must be square");
    detail::require(entries_.allFinite(), "HermitianOperator: entries must be finite");
    const double scale = entries_.norm();
    const double asym = (entries_ - entries_.adjoint()).norm();
    if (asym > kHermiticityTolerance * scale) {
      throw InvalidArgument("HermitianOperator: matrix is not Hermitian (||A - A^dagger|| / ||A|| = " +
                            std::to_string(asym / scale) + ")");
    }
  }

  static HermitianOperator diagonal(const std::vector<double>& values, Unit unit = Unit::energy) {
    Eigen::VectorXcd d(static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) d(static_cast<Index>(i)) = values[i];
    return HermitianOperator(Eigen::MatrixXcd(d.asDiagonal()), unit);
  }

  static HermitianOperator identity(Index dim, Unit unit = Unit::dimensionless) {
    return HermitianOperator(Eigen::MatrixXcd::Identity(dim, dim), unit);
  }

  Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  Unit unit() const { return unit_; }

  // Real rescaling keeps Hermiticity; used for S = H / T and friends.
  HermitianOperator scaled(double factor, Unit unit) const {
    detail::require(std::isfinite(factor), "HermitianOperator::scaled: factor must be finite");
    return HermitianOperator(entries_ * factor, unit);
  }

 private:
  Eigen::MatrixXcd entries_;
  Unit unit_;
};

class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    detail::require(amplitudes_.size() >= 1, "StateVector: dimension must be >= 1");
    detail::require(amplitudes_.allFinite(), "StateVector: amplitudes must be finite");
  }

  StateVector(std::initializer_list<Complex> values)
      : StateVector(Eigen::Map<const Eigen::VectorXcd>(values.begin(), static_cast<Index>(values.size()))) {}

  static StateVector basis(Index dim, Index k) {
    detail::require(k >= 0 && k < dim, "StateVector::basis: index out of range");
    return StateVector(Eigen::VectorXcd::Unit(dim, k));
  }

  Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](Index i) const { return amplitudes_(i); }
  double norm() const { return amplitudes_.norm(); }

  StateVector normalized() const {
    const double n = norm();
    detail::require(n > 0.0, "StateVector::normalized: zero vector");
    return StateVector(amplitudes_ / n);
  }

 private:
  Eigen::VectorXcd amplitudes_;
};

// Random normalized state; component k draws from the (seed, stream) normal stream.
inline StateVector random_state(Index dim, std::uint64_t seed, std::uint64_t stream = 0x57a7e) {
  rng::NormalStream normals(seed, stream);
  Eigen::VectorXcd v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = normals.next();
    const double im = normals.next();
    v(i) = Complex(re, im);
  }
  return StateVector(v).normalized();
}

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;    // ascending
  Eigen::MatrixXcd eigenvectors;  // columns orthonormal

  Index dim() const { return eigenvalues.size(); }
};

// Eigenvalues ascending. Inside a degenerate cluster the basis is whatever the
// solver returns; everything downstream is basis independent.
inline SpectralDecomposition spectral_decompose(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw NumericalError("spectral_decompose: eigensolver failed");
  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};

  const Index n = a.dim();
  const double scale = std::max(a.matrix().norm(), std::numeric_limits<double>::min());
  const Eigen::MatrixXcd rebuilt =
      out.eigenvectors * out.eigenvalues.cast<Complex>().asDiagonal() * out.eigenvectors.adjoint();
  const double reconstruction = (rebuilt - a.matrix()).norm();
  const double orthonormality =
      (out.eigenvectors.adjoint() * out.eigenvectors - Eigen::MatrixXcd::Identity(n, n)).norm();
  if (reconstruction > 1e-10 * scale && reconstruction > 1e-300) {
    throw NumericalError("spectral_decompose: reconstruction error " + std::to_string(reconstruction));
  }
  if (orthonormality > 1e-12 * std::max<double>(1.0, std::sqrt(static_cast<double>(n)))) {
    throw NumericalError("spectral_decompose: eigenvectors not orthonormal");
  }
  return out;
}

namespace detail {

inline void require_dims(Index a, Index b, std::string_view where) {
  if (a != b) {
    throw InvalidArgument(std::string(where) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                          std::to_string(b) + ")");
  }
}

// exp(z * lambda) for every eigenvalue; refuses to saturate to inf.
inline Eigen::VectorXcd exponential_factors(const Eigen::VectorXd& eigenvalues, Complex z) {
  static const double max_exponent = std::log(std::numeric_limits<double>::max());
  Eigen::VectorXcd f(eigenvalues.size());
  for (Index k = 0; k < eigenvalues.size(); ++k) {
    const Complex w = z * eigenvalues(k);
    if (!(std::isfinite(w.real()) && std::isfinite(w.imag())) || w.real() > max_exponent) {
      throw NumericalError("apply_exponential: exponent real part " + std::to_string(w.real()) +
                           " exceeds the representable range");
    }
    f(k) = std::exp(w);
  }
  return f;
}

}  // namespace detail

// e^{zA} psi = V diag(e^{z lambda}) V^dagger psi.
inline StateVector apply_exponential(const SpectralDecomposition& eig, Complex z, const StateVector& psi) {
  detail::require_dims(eig.dim(), psi.dim(), "apply_exponential");
  const Eigen::VectorXcd f = detail::exponential_factors(eig.eigenvalues, z);
  const Eigen::VectorXcd coeffs = eig.eigenvectors.adjoint() * psi.amplitudes();
  return StateVector(eig.eigenvectors * f.cwiseProduct(coeffs));
}

inline StateVector apply_exponential(const HermitianOperator& a, Complex z, const StateVector& psi) {
  detail::require_dims(a.dim(), psi.dim(), "apply_exponential");
  return apply_exponential(spectral_decompose(a), z, psi);
}

// The full propagator matrix e^{zA}.
inline Eigen::MatrixXcd exponential_matrix(const SpectralDecomposition& eig, Complex z) {
  const Eigen::VectorXcd f = detail::exponential_factors(eig.eigenvalues, z);
  return eig.eigenvectors * f.asDiagonal() * eig.eigenvectors.adjoint();
}

// <A> = psi^dagger A psi / psi^dagger psi.
inline double expectation(const HermitianOperator& a, const StateVector& psi) {
  detail::require_dims(a.dim(), psi.dim(), "expectation");
  const double n2 = psi.amplitudes().squaredNorm();
  detail::require(n2 > 0.0, "expectation: zero state vector");
  return psi.amplitudes().dot(a.matrix() * psi.amplitudes()).real() / n2;
}

// sqrt(<A^2> - <A>^2), evaluated as ||(A - <A>) psi|| / ||psi|| so the
// variance can never come out negative through cancellation.
inline double uncertainty(const HermitianOperator& a, const StateVector& psi) {
  const double mean = expectation(a, psi);
  const Eigen::VectorXcd centered = a.matrix() * psi.amplitudes() - mean * psi.amplitudes();
  return centered.norm() / psi.norm();
}

// ---------------------------------------------------------------------------
// Hamiltonian presets

struct TwoLevel {
  double e0 = 0.0;
  double e1 = 1.0;
};

// hbar * omega * (n + 1/2), n = 0..N-1.
struct TruncatedOscillator {
  Index levels = 1;
  double omega = 1.0;
};

// (G + G^dagger) / sqrt(8N) with G complex Gaussian; deterministic in seed.
struct RandomHermitian {
  Index dim = 1;
  std::uint64_t seed = 0;
};

using HamiltonianSpec = std::variant<TwoLevel, TruncatedOscillator, RandomHermitian>;

inline Eigen::MatrixXcd random_hermitian_matrix(Index n, std::uint64_t seed) {
  rng::NormalStream normals(seed, 0x4a11);
  Eigen::MatrixXcd g(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double re = normals.next();
      const double im = normals.next();
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::MatrixXcd h = (g + g.adjoint()) / std::sqrt(8.0 * static_cast<double>(n));
  // exact Hermiticity after rounding
  h = (0.5 * (h + h.adjoint())).eval();
  for (Index i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  return h;
}

// Builds H from a preset. With shift_nonnegative the ground-state energy is
// subtracted so the spectrum starts at zero.
inline HermitianOperator build_hamiltonian(const HamiltonianSpec& spec, bool shift_nonnegative = false,
                                           const Constants& constants = {}) {
  constants.validate();
  Eigen::MatrixXcd h;
  if (const auto* two = std::get_if<TwoLevel>(&spec)) {
    detail::require(std::isfinite(two->e0) && std::isfinite(two->e1), "two_level: energies must be finite");
    h = Eigen::MatrixXcd::Zero(2, 2);
    h(0, 0) = two->e0;
    h(1, 1) = two->e1;
  } else if (const auto* osc = std::get_if<TruncatedOscillator>(&spec)) {
    detail::require(osc->levels > 0, "truncated_oscillator: N must be > 0");
    detail::require(std::isfinite(osc->omega), "truncated_oscillator: omega must be finite");
    h = Eigen::MatrixXcd::Zero(osc->levels, osc->levels);
    for (Index n = 0; n < osc->levels; ++n)
      h(n, n) = constants.hbar * osc->omega * (static_cast<double>(n) + 0.5);
  } else {
    const auto& rnd = std::get<RandomHermitian>(spec);
    detail::require(rnd.dim > 0, "random_hermitian: N must be > 0");
    h = random_hermitian_matrix(rnd.dim, rnd.seed);
  }
  if (shift_nonnegative) {
    const double ground = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly)
                              .eigenvalues()(0);
    h.diagonal().array() -= ground;
  }
  return HermitianOperator(std::move(h), Unit::energy);
}

// Operator analogues of Re/Im: M = Re(M) + i Im(M) with both parts Hermitian.
inline Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }
inline Eigen::MatrixXcd antihermitian_part(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()) / Complex(0.0, 2.0);
}

}  // namespace entropic
