#include <gtest/gtest.h>

#include <cmath>

#include "entropic/onsager.hpp"
#include "entropic/onsager_io.hpp"

using namespace entropic;
using namespace entropic::onsager;

namespace {

MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
  MatrixXd m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index k = 0;
    for (double v : r) m(i, k++) = v;
    ++i;
  }
  return m;
}

VectorXd vec(std::initializer_list<double> v) {
  VectorXd out(v.size());
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST(Forces, Examples) {
  const OnsagerSystem id(MatrixXd::Identity(2, 2), MatrixXd::Identity(2, 2), vec({1, 0}));
  EXPECT_EQ(forces(id, vec({1, 0})), vec({-1, 0}));
  EXPECT_EQ(forces(id, vec({0, 0})), vec({0, 0}));
  const OnsagerSystem diag(MatrixXd::Identity(2, 2), mat({{2, 0}, {0, 3}}), vec({1, 1}));
  EXPECT_EQ(forces(diag, vec({1, 1})), vec({-2, -3}));
  EXPECT_THROW(forces(diag, vec({1, 1, 1})), InvalidArgument);
}

TEST(OnsagerSystem, Invariants) {
  const auto sys = random_system(5, 3, 0);
  EXPECT_LE((sys.R() * sys.L() - MatrixXd::Identity(5, 5)).norm(), 1e-10);
  EXPECT_THROW(OnsagerSystem(mat({{1, 1}, {1, 1}}), MatrixXd::Identity(2, 2), vec({1, 0})), InvalidArgument);
  EXPECT_THROW(OnsagerSystem(MatrixXd::Identity(2, 2), mat({{1, 0}, {0, -1}}), vec({1, 0})), InvalidArgument);
  EXPECT_THROW(OnsagerSystem(MatrixXd::Identity(2, 2), mat({{1, 0.5}, {0, 1}}), vec({1, 0})), InvalidArgument);
  EXPECT_THROW(OnsagerSystem(mat({{1, 0}, {0, 1e-13}}), MatrixXd::Identity(2, 2), vec({1, 0})), InvalidArgument);
  EXPECT_THROW(OnsagerSystem(MatrixXd::Identity(2, 3), MatrixXd::Identity(2, 2), vec({1, 0})), InvalidArgument);
}

TEST(Relax, ScalarDecay) {
  const OnsagerSystem sys(mat({{1}}), mat({{1}}), vec({1}));
  const auto traj = relax(sys, uniform_grid(5.0, 50));
  ASSERT_EQ(traj.size(), 51u);
  ASSERT_EQ(traj.ys.size(), 51u);
  ASSERT_EQ(traj.entropy_rates.size(), 51u);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    EXPECT_NEAR(traj.ys[k](0), std::exp(-traj.tprimes[k]), 1e-15);
  }
}

TEST(Relax, DecayRatesAreEigenvaluesOfL) {
  const OnsagerSystem sys(mat({{2, 1}, {1, 2}}), MatrixXd::Identity(2, 2), vec({1, 0}));
  const auto traj = relax(sys, uniform_grid(2.0, 4));
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double t = traj.tprimes[k];
    // y0 = (v1 + v3)/2 with v1 = (1,-1), v3 = (1,1)
    EXPECT_NEAR(traj.ys[k](0), 0.5 * (std::exp(-t) + std::exp(-3 * t)), 1e-14);
    EXPECT_NEAR(traj.ys[k](1), 0.5 * (std::exp(-3 * t) - std::exp(-t)), 1e-14);
  }
}

TEST(Relax, MatchesMatrixExponentialWithNonTrivialG) {
  const auto sys = random_system(6, 17, 1);
  const auto traj = relax(sys, uniform_grid(3.0, 6));
  const MatrixXd a = -sys.L() * sys.G();
  for (std::size_t k = 0; k < traj.size(); ++k) {
    // Taylor series of exp(a t), converged in double precision for these norms
    MatrixXd term = MatrixXd::Identity(6, 6), sum = term;
    for (int m = 1; m < 80; ++m) {
      term = term * a * traj.tprimes[k] / double(m);
      sum += term;
    }
    EXPECT_LE((traj.ys[k] - sum * sys.y0()).norm(), 1e-10 * sys.y0().norm());
  }
}

TEST(Relax, AsymmetricLIsFlaggedButIntegrated) {
  MatrixXd l = mat({{2, 1}, {1, 2}});
  l(0, 1) += 0.5;
  l(1, 0) -= 0.5;
  EXPECT_FALSE(reciprocity_check(l).symmetric);
  const OnsagerSystem sys(l, MatrixXd::Identity(2, 2), vec({1, 0.5}));
  const auto traj = relax(sys, uniform_grid(4.0, 400));
  // finite-difference check of ydot = -L G y at interior points
  for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
    const double dt = traj.tprimes[k + 1] - traj.tprimes[k - 1];
    const VectorXd fd = (traj.ys[k + 1] - traj.ys[k - 1]) / dt;
    EXPECT_LE((fd + l * traj.ys[k]).norm(), 2e-3 * traj.ys[k].norm());
  }
  EXPECT_LT(traj.ys.back().norm(), 0.01 * sys.y0().norm());
}

TEST(Relax, EntropyMonotoneAndLyapunovBound) {
  for (std::uint64_t idx = 0; idx < 50; ++idx) {
    const auto sys = random_system(2 + Eigen::Index(idx % 7), 99, idx);
    const auto traj = relax(sys, uniform_grid(10.0, 100));
    const double lambda = lyapunov_rate(sys);
    // lambda may be negative: L G is not symmetric, only similar to an SPD matrix
    for (std::size_t k = 0; k < traj.size(); ++k) {
      EXPECT_GE(traj.entropy_rates[k], -1e-12);
      if (k > 0) {
        EXPECT_GE(traj.entropies[k], traj.entropies[k - 1] - 1e-14);
      }
      EXPECT_LE(traj.ys[k].norm(), sys.y0().norm() * std::exp(-lambda * traj.tprimes[k]) * (1 + 1e-12) + 1e-300);
    }
  }
}

TEST(Relax, GridPreconditions) {
  const OnsagerSystem sys(mat({{1}}), mat({{1}}), vec({1}));
  EXPECT_THROW(relax(sys, {}), InvalidArgument);
  EXPECT_THROW(relax(sys, {0.1, 0.2}), InvalidArgument);
  EXPECT_THROW(relax(sys, {0.0, 0.2, 0.1}), InvalidArgument);
}

TEST(EntropyRate, Examples) {
  const OnsagerSystem scalar(mat({{2}}), mat({{1}}), vec({1}));
  const auto r = entropy_rate(scalar, vec({1}));
  EXPECT_DOUBLE_EQ(r.via_velocities, 2.0);
  EXPECT_DOUBLE_EQ(r.via_forces, 2.0);
  EXPECT_DOUBLE_EQ(harmonic_hamiltonian(scalar, vec({1})), 2.0);
  const auto zero = entropy_rate(scalar, vec({0}));
  EXPECT_EQ(zero.via_velocities, 0.0);
  EXPECT_EQ(zero.via_forces, 0.0);
  EXPECT_EQ(harmonic_hamiltonian(scalar, vec({0})), 0.0);
}

TEST(EntropyRate, FormsAgreeOnRandomSystems) {
  for (std::uint64_t idx = 0; idx < 200; ++idx) {
    const auto sys = random_system(1 + Eigen::Index(idx % 8), 5, idx);
    const auto r = entropy_rate(sys, sys.y0());
    EXPECT_LE(rel(r.via_velocities, r.via_forces), 1e-12);
    EXPECT_GT(r.via_forces, 0.0);
    EXPECT_LE(rel(harmonic_hamiltonian(sys, sys.y0()), r.via_forces), 1e-12);
  }
}

TEST(Reciprocity, Examples) {
  const auto sym = reciprocity_check(mat({{2, 1}, {1, 2}}));
  EXPECT_TRUE(sym.symmetric);
  EXPECT_EQ(sym.asymmetry_norm, 0.0);
  const MatrixXd l = mat({{1, 1}, {0, 1}});
  const auto asym = reciprocity_check(l);
  EXPECT_FALSE(asym.symmetric);
  EXPECT_NEAR(asym.asymmetry_norm, std::sqrt(2.0) / l.norm(), 1e-15);
  EXPECT_TRUE(reciprocity_check(random_system(6, 1, 2).L()).symmetric);
  EXPECT_THROW(reciprocity_check(MatrixXd::Identity(2, 3)), InvalidArgument);
}

TEST(WickMap, Examples) {
  EXPECT_EQ(wick_map(0.0), std::complex<double>(0, 0));
  EXPECT_EQ(wick_map(1.0), std::complex<double>(0, 1));
  EXPECT_EQ(wick_map(-2.0), std::complex<double>(0, -2));
}

TEST(OnsagerIo, RoundTripAndErrors) {
  const auto sys = random_system(3, 8, 0);
  const auto back = system_from_json(system_to_json(sys));
  EXPECT_EQ(back.L(), sys.L());
  EXPECT_EQ(back.G(), sys.G());
  EXPECT_EQ(back.y0(), sys.y0());
  const auto j = nlohmann::json::parse(R"({"N": 2, "L": [1, 2, 3, 4], "G": [1, 0, 0, 1], "y0": [1, 0]})");
  EXPECT_EQ(system_from_json(j).L()(0, 1), 2.0);
  EXPECT_THROW(system_from_json(nlohmann::json::parse(R"({"N": 2, "L": [1, 2, 3], "G": [1, 0, 0, 1], "y0": [1, 0]})")),
               InvalidArgument);
  EXPECT_THROW(system_from_json(nlohmann::json::parse(R"({"L": [1]})")), InvalidArgument);
}
