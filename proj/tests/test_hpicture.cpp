#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entropic/hpicture.hpp"

using namespace entropic;
using std::numbers::pi;

namespace {
const double r2 = 1.0 / std::sqrt(2.0);
}

TEST(EvolveH, EigenstateStaysPut) {
  const auto h = HermitianOperator::diagonal({0.0, 1.0});
  const auto traj = evolve_h(StateVector{1.0, 0.0}, h, uniform_grid(7.0, 10));
  for (const auto& s : traj.states) {
    EXPECT_NEAR(std::abs(s[0] - Complex(1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-15);
  }
  EXPECT_NEAR(noether_energy_drift(traj), 0.0, 1e-12);
}

TEST(EvolveH, RelativePhaseAtPi) {
  const auto h = HermitianOperator::diagonal({0.0, 1.0});
  const auto traj = evolve_h(StateVector{r2, r2}, h, {0.0, pi});
  const auto& s = traj.states.back();
  EXPECT_NEAR(std::abs(s[0] - Complex(r2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - Complex(-r2)), 0.0, 1e-15);
}

TEST(EvolveH, NormPreservedAtLongTimes) {
  const auto h = build_hamiltonian(RandomHermitian{32, 3});
  const auto traj = evolve_h(random_state(32, 4), h, {0.0, 1e3});
  EXPECT_NEAR(traj.norms.back(), 1.0, 1e-12);
}

TEST(EvolveH, RandomSuperpositionConservesEnergy) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = build_hamiltonian(RandomHermitian{16, seed});
    const auto traj = evolve_h(random_state(16, seed + 50), h, uniform_grid(100.0, 40));
    EXPECT_LE(noether_energy_drift(traj), 1e-10 * std::abs(traj.energy_expectations.front()) + 1e-12);
  }
}

TEST(EvolveH, GroupLawAndReversibility) {
  const auto h = build_hamiltonian(RandomHermitian{10, 1});
  const auto psi = random_state(10, 2);
  const auto a = propagate_h(propagate_h(psi, h, 1.7), h, 2.4);
  const auto b = propagate_h(psi, h, 4.1);
  EXPECT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-10);
  const auto back = propagate_h(propagate_h(psi, h, 3.3), h, -3.3);
  EXPECT_LT((back.amplitudes() - psi.amplitudes()).norm(), 1e-10);
}

TEST(EvolveH, RejectsBadGrids) {
  const auto h = HermitianOperator::diagonal({0.0, 1.0});
  EXPECT_THROW(evolve_h(StateVector{1.0, 0.0}, h, {0.0, 2.0, 1.0}), InvalidArgument);
  EXPECT_THROW(evolve_h(StateVector{1.0, 0.0}, h, {0.5, 1.0}), InvalidArgument);
  EXPECT_THROW(evolve_h(StateVector{1.0, 0.0}, h, {}), InvalidArgument);
  EXPECT_THROW(evolve_h(StateVector{1.0, 0.0, 0.0}, h, {0.0}), InvalidArgument);
}

TEST(EvolveHPerturbed, ZeroPerturbationMatchesUnperturbed) {
  const auto h = build_hamiltonian(RandomHermitian{6, 8});
  const auto psi = random_state(6, 9);
  const auto grid = uniform_grid(5.0, 5);
  const auto a = evolve_h(psi, h, grid);
  for (auto mode : {PerturbedMode::exact, PerturbedMode::first_order}) {
    const auto b = evolve_h_perturbed(psi, h, grid, 0.0, mode);
    for (std::size_t k = 0; k < grid.size(); ++k)
      EXPECT_LT((a.states[k].amplitudes() - b.states[k].amplitudes()).norm(), 1e-12);
  }
}

TEST(EvolveHPerturbed, ScalarClosedForm) {
  const auto h = HermitianOperator::diagonal({1.0});
  const auto traj = evolve_h_perturbed(StateVector{1.0}, h, {0.0, 1.0}, 0.1, PerturbedMode::exact);
  EXPECT_NEAR(traj.norms.back(), std::exp(0.1 / 1.01), 1e-14);
  const auto first = evolve_h_perturbed(StateVector{1.0}, h, {0.0, 1.0}, 0.1, PerturbedMode::first_order);
  EXPECT_NEAR(first.norms.back(), std::exp(0.1), 1e-14);
}

TEST(EvolveHPerturbed, FirstOrderDiscrepancyIsSecondOrder) {
  // log-norm discrepancy for the scalar case is eps' t (1 - 1/(1+eps'^2)) ~ eps'^3;
  // divided by eps'^2 it must stay bounded as eps' shrinks.
  const auto h = HermitianOperator::diagonal({1.0});
  double previous = INFINITY;
  for (double eps : {0.2, 0.1, 0.05}) {
    const auto a = evolve_h_perturbed(StateVector{1.0}, h, {0.0, 1.0}, eps, PerturbedMode::exact);
    const auto b = evolve_h_perturbed(StateVector{1.0}, h, {0.0, 1.0}, eps, PerturbedMode::first_order);
    const double ratio = std::abs(std::log(a.norms.back()) - std::log(b.norms.back())) / (eps * eps);
    EXPECT_LT(ratio, 1.0);
    EXPECT_LE(ratio, previous);
    previous = ratio;
  }
}

TEST(EvolveHPerturbed, NegativePerturbationBreaksConservation) {
  const auto h = HermitianOperator::diagonal({0.0, 1.0});
  const auto traj = evolve_h_perturbed(StateVector{r2, r2}, h, uniform_grid(10.0, 20), -0.1, PerturbedMode::exact);
  EXPECT_GT(noether_energy_drift(traj), 0.1);
  // amplitude of the excited level is reweighted by exp(-0.1 t / 1.01)
  const double w = std::exp(-0.1 * 10.0 / 1.01);
  const double expected_energy = w * w / (1.0 + w * w);
  EXPECT_NEAR(traj.energy_expectations.back(), expected_energy, 1e-12);
}

TEST(EvolveHPerturbed, NormMonotonicityFollowsSign) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = build_hamiltonian(RandomHermitian{8, seed}, true);
    const auto psi = random_state(8, seed + 20);
    const auto grid = uniform_grid(20.0, 50);
    const auto up = evolve_h_perturbed(psi, h, grid, 0.05, PerturbedMode::exact);
    const auto down = evolve_h_perturbed(psi, h, grid, -0.05, PerturbedMode::exact);
    for (std::size_t k = 1; k < grid.size(); ++k) {
      EXPECT_GE(up.norms[k], up.norms[k - 1] * (1.0 - 1e-14));
      EXPECT_LE(down.norms[k], down.norms[k - 1] * (1.0 + 1e-14));
    }
  }
}

TEST(EvolveHPerturbed, RejectsLargePerturbation) {
  const auto h = HermitianOperator::diagonal({1.0});
  EXPECT_THROW(evolve_h_perturbed(StateVector{1.0}, h, {0.0}, 1.0, PerturbedMode::exact), InvalidArgument);
  EXPECT_THROW(evolve_h_perturbed(StateVector{1.0}, h, {0.0}, -1.5, PerturbedMode::exact), InvalidArgument);
}

TEST(NoetherDrift, EmptyTrajectoryRejected) { EXPECT_THROW(noether_energy_drift(HTrajectory{}), InvalidArgument); }
