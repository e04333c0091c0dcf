#pragma once

// Energy picture: i hbar dpsi/dt = H psi for constant H, and the
// phenomenological variant (i + eps') hbar dpsi/dt = H psi.

#include <algorithm>
#include <cmath>
#include <string_view>
#include <vector>

#include "entropic/grid.hpp"
#include "entropic/opcore.hpp"

namespace entropic {

struct HTrajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::vector<double> energy_expectations;
  std::vector<double> norms;

  std::size_t size() const { return times.size(); }
};

enum class PerturbedMode {
  exact,        // psi(t) = exp[(eps' - i) H t / (hbar (1 + eps'^2))] psi0
  first_order,  // same exponent with the 1/(1 + eps'^2) dropped
};

inline PerturbedMode parse_perturbed_mode(std::string_view s) {
  if (s == "exact") return PerturbedMode::exact;
  if (s == "first_order") return PerturbedMode::first_order;
  throw InvalidArgument("unknown perturbed mode '" + std::string(s) + "'");
}

namespace detail {

inline HTrajectory run_h_trajectory(const StateVector& psi0, const HermitianOperator& h,
                                    const std::vector<double>& t_grid, Complex rate) {
  require_dims(h.dim(), psi0.dim(), "evolve_h");
  require_grid_from_zero(t_grid, "evolve_h");
  const SpectralDecomposition eig = spectral_decompose(h);
  HTrajectory traj;
  traj.times = t_grid;
  traj.states.reserve(t_grid.size());
  for (double t : t_grid) {
    StateVector psi = apply_exponential(eig, rate * t, psi0);
    traj.energy_expectations.push_back(expectation(h, psi));
    traj.norms.push_back(psi.norm());
    traj.states.push_back(std::move(psi));
  }
  return traj;
}

}  // namespace detail

// Single propagation step e^{-iHt/hbar} psi; t may be negative.
inline StateVector propagate_h(const StateVector& psi, const HermitianOperator& h, double t,
                               const Constants& constants = {}) {
  constants.validate();
  return apply_exponential(h, Complex(0.0, -t / constants.hbar), psi);
}

inline HTrajectory evolve_h(const StateVector& psi0, const HermitianOperator& h, const std::vector<double>& t_grid,
                            const Constants& constants = {}) {
  constants.validate();
  return detail::run_h_trajectory(psi0, h, t_grid, Complex(0.0, -1.0 / constants.hbar));
}

inline HTrajectory evolve_h_perturbed(const StateVector& psi0, const HermitianOperator& h,
                                      const std::vector<double>& t_grid, double eps_prime, PerturbedMode mode,
                                      const Constants& constants = {}) {
  constants.validate();
  detail::require(std::isfinite(eps_prime) && std::abs(eps_prime) < 1.0,
                  "evolve_h_perturbed: |eps'| must be < 1");
  double scale = 1.0 / constants.hbar;
  if (mode == PerturbedMode::exact) scale /= 1.0 + eps_prime * eps_prime;
  return detail::run_h_trajectory(psi0, h, t_grid, Complex(eps_prime, -1.0) * scale);
}

// max_t |<H>(t) - <H>(0)|: zero for a conserved Noether charge.
inline double noether_energy_drift(const HTrajectory& traj) {
  detail::require(!traj.energy_expectations.empty(), "noether_energy_drift: empty trajectory");
  const double e0 = traj.energy_expectations.front();
  double drift = 0.0;
  for (double e : traj.energy_expectations) drift = std::max(drift, std::abs(e - e0));
  return drift;
}

}  // namespace entropic
