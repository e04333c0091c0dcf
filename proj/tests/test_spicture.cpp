#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entropic/spicture.hpp"

using namespace entropic;
using std::numbers::pi;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);

double max_diff(const StateVector& a, const StateVector& b) {
  return (a.amplitudes() - b.amplitudes()).norm();
}

}  // namespace

// --- Wick factor -----------------------------------------------------------

TEST(WickFactorTest, NoGravityIsUnitary) {
  const auto w = wick_factor(0.0);
  EXPECT_EQ(w.phi, 0.0);
  EXPECT_EQ(w.c, Complex(1.0, 0.0));
  EXPECT_EQ(w.epsilon, 0.0);
}

TEST(WickFactorTest, StrongFieldIsMaximallyDissipative) {
  const auto w = wick_factor(1e6);
  EXPECT_NEAR(w.phi, -pi / 2, 1e-9);
  EXPECT_NEAR(std::abs(w.c - Complex(0.0, -1.0)), 0.0, 1e-9);
}

TEST(WickFactorTest, HalfwayAtLn2) {
  const auto w = wick_factor(std::log(2.0));
  EXPECT_NEAR(w.phi, -pi / 4, 1e-15);
  EXPECT_NEAR(std::abs(w.c - std::polar(1.0, -pi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(w.epsilon, -pi * std::log(2.0) / 2, 1e-15);
}

TEST(WickFactorTest, InvariantsOverRange) {
  for (double x = 0.0; x < 30.0; x += 0.37) {
    const auto w = wick_factor(x);
    EXPECT_NEAR(w.phi, -(pi / 2) * (1.0 - std::exp(-x)), 1e-12);
    EXPECT_NEAR(std::abs(w.c), 1.0, 1e-12);
    EXPECT_GE(w.phi, -pi / 2);
    EXPECT_LE(w.phi, 0.0);
    EXPECT_LE(w.epsilon, 0.0);
  }
}

TEST(WickFactorTest, RejectsInvalid) {
  EXPECT_THROW(wick_factor(-0.1), InvalidArgument);
  EXPECT_THROW(wick_factor(std::nan("")), InvalidArgument);
  EXPECT_THROW(wick_factor(INFINITY), InvalidArgument);
}

// --- Entropy operator ----------------------------------------------------------

TEST(EntropyOperatorTest, Examples) {
  const auto s1 = entropy_operator(HermitianOperator::diagonal({0.0, 1.0}), 1.0);
  EXPECT_EQ(s1.S.unit(), Unit::entropy);
  EXPECT_EQ(s1.S.matrix()(1, 1), Complex(1.0));
  const auto s2 = entropy_operator(HermitianOperator::diagonal({2.0, 4.0}), 2.0);
  EXPECT_EQ(s2.S.matrix()(0, 0), Complex(1.0));
  EXPECT_EQ(s2.S.matrix()(1, 1), Complex(2.0));
  EXPECT_EQ(s2.temperature, 2.0);
  EXPECT_THROW(entropy_operator(HermitianOperator::diagonal({1.0}), 0.0), InvalidArgument);
  EXPECT_THROW(entropy_operator(HermitianOperator::diagonal({1.0}), -3.0), InvalidArgument);
}

// --- Thermal-time chart --------------------------------------------------------

TEST(ThermalTimeChartTest, FixedPoint) {
  const ThermalTimeChart chart{1.0, 1.0, {}};
  const double T = chart_t_to_T(chart, 1.0);
  EXPECT_DOUBLE_EQ(T, 1.0);
  EXPECT_DOUBLE_EQ(chart_T_to_tau(chart, T), 0.0);
}

TEST(ThermalTimeChartTest, HalfTime) {
  const ThermalTimeChart chart{1.0, 1.0, {}};
  const double T = chart_t_to_T(chart, 0.5);
  EXPECT_DOUBLE_EQ(T, 2.0);
  EXPECT_NEAR(chart_T_to_tau(chart, T), std::log(2.0), 1e-15);
}

TEST(ThermalTimeChartTest, JacobianByFiniteDifference) {
  const ThermalTimeChart chart{1.0, 1.0, {}};
  auto tau_of_t = [&](double t) { return chart_T_to_tau(chart, chart_t_to_T(chart, t)); };
  const double h = 1e-5;
  const double fd = (tau_of_t(2.0 + h) - tau_of_t(2.0 - h)) / (2 * h);
  EXPECT_NEAR(fd, -0.5, 1e-6);
}

TEST(ThermalTimeChartTest, RoundTripRealC) {
  const ThermalTimeChart chart{3.5, 0.8, Constants{1.7, 0.3}};
  for (double t : {1e-3, 0.2, 1.0, 17.0, 4e4}) {
    const double back = chart_tau_to_t(chart, chart_T_to_tau(chart, chart_t_to_T(chart, t))).real();
    EXPECT_NEAR(back, t, 1e-12 * t);
    EXPECT_EQ(chart_tau_to_t(chart, 0.3).imag(), 0.0);
  }
}

TEST(ThermalTimeChartTest, ComplexFactorGivesComplexTime) {
  const ThermalTimeChart chart{1.0, wick_factor(0.2).c, {}};
  EXPECT_LT(chart_tau_to_t(chart, 0.0).imag(), 0.0);
  EXPECT_THROW(chart_t_to_T(chart, 1.0), InvalidArgument);
}

TEST(ThermalTimeChartTest, RejectsNonPositive) {
  const ThermalTimeChart chart{1.0, 1.0, {}};
  EXPECT_THROW(chart_t_to_T(chart, 0.0), InvalidArgument);
  EXPECT_THROW(chart_t_to_T(chart, -1.0), InvalidArgument);
  EXPECT_THROW(chart_T_to_tau(chart, 0.0), InvalidArgument);
  EXPECT_THROW(chart_t_to_T(ThermalTimeChart{0.0, 1.0, {}}, 1.0), InvalidArgument);
}

// --- evolve_s ----------------------------------------------------------------

TEST(EvolveS, PurePhase) {
  const auto s = GeneratorSchedule::constant(HermitianOperator::diagonal({1.0, 1.0}, Unit::entropy));
  const StateVector psi0{Complex(0.6, 0.0), Complex(0.0, 0.8)};
  const auto traj = evolve_s(psi0, s, {0.0, pi}, 0.0);
  EXPECT_LT((traj.states.back().amplitudes() + psi0.amplitudes()).norm(), 1e-15);
  EXPECT_NEAR(traj.norms.back(), 1.0, 1e-15);
}

TEST(EvolveS, DissipativeEigenvector) {
  const auto s = GeneratorSchedule::constant(HermitianOperator::diagonal({2.0, 5.0}, Unit::entropy));
  const StateVector psi0{1.0, 0.0};
  const auto traj = evolve_s(psi0, s, {0.0, 1.0}, -0.1);
  const Complex expected = std::exp(Complex(0.1, 1.0) * 2.0);
  EXPECT_NEAR(std::abs(traj.states.back()[0] - expected), 0.0, 1e-14);
  EXPECT_NEAR(traj.norms.back(), std::exp(0.2), 1e-14);
}

TEST(EvolveS, SemigroupSplit) {
  const auto s = GeneratorSchedule::constant(build_hamiltonian(RandomHermitian{12, 5}, true).scaled(1.0, Unit::entropy));
  const auto psi0 = random_state(12, 6);
  const double eps = -0.07;
  const auto first = evolve_s(psi0, s, {0.0, 0.3}, eps).states.back();
  const auto second = evolve_s(first, s, {0.0, 0.7}, eps).states.back();
  const auto direct = evolve_s(psi0, s, {0.0, 1.0}, eps).states.back();
  EXPECT_LT(max_diff(second, direct), 1e-10 * direct.norm());
}

TEST(EvolveS, AntidissipativeNeedsFlag) {
  const auto s = GeneratorSchedule::constant(HermitianOperator::diagonal({1.0}, Unit::entropy));
  EXPECT_THROW(evolve_s(StateVector{1.0}, s, {0.0, 1.0}, 0.1), InvalidArgument);
  EvolveSOptions opt;
  opt.allow_antidissipative = true;
  const auto traj = evolve_s(StateVector{1.0}, s, {0.0, 1.0}, 0.1, {}, opt);
  EXPECT_NEAR(traj.norms.back(), std::exp(-0.1), 1e-15);
}

TEST(EvolveS, DilatationAndContraction) {
  EvolveSOptions anti;
  anti.allow_antidissipative = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = GeneratorSchedule::constant(build_hamiltonian(RandomHermitian{8, seed}, true).scaled(1.0, Unit::entropy));
    const auto psi0 = random_state(8, seed + 3);
    const auto grid = uniform_grid(10.0, 40);
    const auto dil = evolve_s(psi0, s, grid, -0.2);
    const auto con = evolve_s(psi0, s, grid, 0.2, {}, anti);
    for (std::size_t k = 1; k < grid.size(); ++k) {
      EXPECT_GE(dil.norms[k], dil.norms[k - 1] * (1 - 1e-14));
      EXPECT_LE(con.norms[k], con.norms[k - 1] * (1 + 1e-14));
    }
  }
}

TEST(EvolveS, PiecewiseConstantCallableMatchesSpectral) {
  const auto h = build_hamiltonian(RandomHermitian{6, 2}, true).scaled(1.0, Unit::entropy);
  const auto psi0 = random_state(6, 1);
  const auto grid = uniform_grid(2.0, 4);
  const auto exact = evolve_s(psi0, GeneratorSchedule::constant(h), grid, -0.05);
  const auto stepped = evolve_s(psi0, GeneratorSchedule::piecewise([h](double) { return h; }), grid, -0.05);
  for (std::size_t k = 0; k < grid.size(); ++k) EXPECT_LT(max_diff(exact.states[k], stepped.states[k]), 1e-12);
}

TEST(EvolveS, PiecewiseChartScheduleMatchesClosedForm) {
  // S(tau) = H e^{-tau}: commuting, so the ordered exponential has the
  // closed form exp(g (1 - e^{-tau}) H).
  const auto h = build_hamiltonian(RandomHermitian{5, 9});
  const auto psi0 = random_state(5, 10);
  const double eps = -0.1;
  const auto grid = uniform_grid(3.0, 6);
  const auto traj = evolve_s(psi0, chart_schedule(h, 1.0), grid, eps);
  const auto eig = spectral_decompose(h);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto ref = apply_exponential(eig, Complex(-eps, 1.0) * (1.0 - std::exp(-grid[k])), psi0);
    EXPECT_LT(max_diff(traj.states[k], ref), 1e-9 * ref.norm());
  }
}

TEST(EvolveS, NonCommutingScheduleConvergesUnderRefinement) {
  // S(tau) = A + tau B with [A, B] != 0. Reference: the same product with a
  // far finer uniform step (no Richardson), independent of the refinement loop.
  const HermitianOperator a(random_hermitian_matrix(4, 1), Unit::entropy);
  const HermitianOperator b(random_hermitian_matrix(4, 2), Unit::entropy);
  auto fn = [a, b](double tau) { return HermitianOperator(a.matrix() + tau * b.matrix(), Unit::entropy); };
  const auto schedule = GeneratorSchedule::piecewise(fn);
  const auto psi0 = random_state(4, 3);
  const auto traj = evolve_s(psi0, schedule, {0.0, 1.0}, -0.05);

  Eigen::VectorXcd v = psi0.amplitudes();
  const int n = 20000;
  const Complex g = Complex(0.05, 1.0);
  for (int j = 0; j < n; ++j) {
    const double mid = (j + 0.5) / n;
    v = apply_exponential(fn(mid), g / double(n), StateVector(v)).amplitudes();
  }
  EXPECT_LT((traj.states.back().amplitudes() - v).norm(), 1e-8);
}

TEST(EvolveS, NonConvergenceReported) {
  const HermitianOperator a(random_hermitian_matrix(3, 1), Unit::entropy);
  const HermitianOperator b(random_hermitian_matrix(3, 2), Unit::entropy);
  auto fn = [a, b](double tau) { return HermitianOperator(a.matrix() + std::sin(40.0 * tau) * b.matrix(), Unit::entropy); };
  EvolveSOptions opt;
  opt.max_halvings = 2;
  EXPECT_THROW(evolve_s(random_state(3, 1), GeneratorSchedule::piecewise(fn), {0.0, 5.0}, 0.0, {}, opt),
               NumericalError);
}

TEST(EvolveS, RejectsBadInputs) {
  const auto s = GeneratorSchedule::constant(HermitianOperator::diagonal({1.0, 2.0}, Unit::entropy));
  EXPECT_THROW(evolve_s(StateVector{1.0}, s, {0.0}, 0.0), InvalidArgument);
  EXPECT_THROW(evolve_s(StateVector{1.0, 0.0}, s, {0.1, 0.2}, 0.0), InvalidArgument);
  EXPECT_THROW(evolve_s(StateVector{1.0, 0.0}, s, {0.0, 1.0}, std::nan("")), InvalidArgument);
}

TEST(EvolveS, EntropicSchrodingerResidual) {
  // Exact flow solves -(i+eps) kB dpsi/dtau = S psi; the semigroup form is
  // off by eps^2 in that equation.
  const auto sop = build_hamiltonian(RandomHermitian{6, 4}, true).scaled(0.5, Unit::entropy);
  const auto schedule = GeneratorSchedule::constant(sop);
  const auto psi0 = random_state(6, 5);
  const double eps = -0.1;
  const auto grid = uniform_grid(1.0, 10000);
  EvolveSOptions exact;
  exact.flow = SFlow::entropic_schrodinger;
  const auto a = evolve_s(psi0, schedule, grid, eps, {}, exact);
  for (double r : entropic_schrodinger_residuals(a, schedule, eps)) EXPECT_LE(r, 1e-6);

  const auto b = evolve_s(psi0, schedule, grid, eps);
  double worst = 0.0;
  for (double r : entropic_schrodinger_residuals(b, schedule, eps)) worst = std::max(worst, r);
  EXPECT_NEAR(worst, eps * eps, 1e-5);
}

TEST(EvolveS, RecordsEntropyExpectation) {
  const auto s = GeneratorSchedule::constant(HermitianOperator::diagonal({0.0, 2.0}, Unit::entropy));
  const auto traj = evolve_s(StateVector{r2, r2}, s, {0.0, 1.0}, -0.5);
  EXPECT_NEAR(traj.entropy_expectations.front(), 1.0, 1e-15);
  // excited amplitude grows by e^{0.5*2}
  const double w = std::exp(2.0 * 0.5 * 1.0);
  EXPECT_NEAR(traj.entropy_expectations.back(), 2.0 * w * w / (1 + w * w), 1e-13);
}

// --- eigen-solutions -----------------------------------------------------------

TEST(EigenSolution, ZeroMode) {
  const auto sop = HermitianOperator::diagonal({0.0, 1.0}, Unit::entropy);
  const auto spec = EigenSolutionSpec::create(sop, StateVector{1.0, 0.0}, 0.0);
  for (double tau : {0.0, 1.0, 50.0}) {
    EXPECT_EQ(max_diff(eigen_solution(spec, tau, -0.3), spec.chi()), 0.0);
  }
}

TEST(EigenSolution, FullRevolution) {
  const auto sop = HermitianOperator::diagonal({0.0, 1.0}, Unit::entropy);
  const auto spec = EigenSolutionSpec::create(sop, StateVector{0.0, 1.0}, 1.0);
  EXPECT_LT(max_diff(eigen_solution(spec, 2 * pi, 0.0), spec.chi()), 1e-15);
}

TEST(EigenSolution, NormGrowth) {
  const auto sop = HermitianOperator::diagonal({0.0, 1.0}, Unit::entropy);
  const auto spec = EigenSolutionSpec::create(sop, StateVector{0.0, 1.0}, 1.0);
  EXPECT_NEAR(eigen_solution(spec, 1.0, -0.5).norm(), std::exp(0.5), 1e-15);
}

TEST(EigenSolution, RejectsNonEigenvector) {
  const auto sop = HermitianOperator::diagonal({0.0, 1.0}, Unit::entropy);
  EXPECT_THROW(EigenSolutionSpec::create(sop, StateVector{r2, r2}, 1.0), InvalidArgument);
  EXPECT_THROW(EigenSolutionSpec::create(sop, StateVector{0.0, 1.0}, 2.0), InvalidArgument);
}

TEST(EigenSolution, AgreesWithEvolveS) {
  const Constants c{1.0, 0.7};
  const auto sop = build_hamiltonian(RandomHermitian{6, 12}, true).scaled(1.3, Unit::entropy);
  const auto schedule = GeneratorSchedule::constant(sop);
  for (const auto& spec : eigen_solution_specs(sop, c)) {
    for (double eps : {0.0, -0.05, -0.4}) {
      const auto traj = evolve_s(spec.chi(), schedule, {0.0, 0.5, 2.0}, eps, c);
      // the semigroup exponent carries 1/kB, so s in units of kB matches it
      for (std::size_t k = 0; k < 3; ++k)
        EXPECT_LT(max_diff(traj.states[k], eigen_solution(spec, traj.taus[k], eps)), 1e-10);
    }
  }
}

// --- entropy production ------------------------------------------------------

TEST(EntropyProductionTest, DissipationFree) {
  const auto out = entropy_production(HermitianOperator::diagonal({1.0}), wick_factor(0.0));
  EXPECT_EQ(out.mode_rates[0], Complex(1.0, 0.0));
}

TEST(EntropyProductionTest, ImaginaryPartMatchesChartFiniteDifference) {
  // eps = -0.05 through the weak-field factor C = 1 + i eps; the chart
  // S(t) = kB t H / (hbar C) is differenced along real t.
  const double eps = -0.05;
  WickFactor w;
  w.epsilon = eps;
  const auto h = HermitianOperator::diagonal({2.0});
  const auto out = entropy_production(h, w);
  EXPECT_NEAR(out.mode_rates[0].imag(), 0.1, 1e-15);

  const ThermalTimeChart chart{1.0, Complex(1.0, eps), {}};
  const double step = 1e-4;
  const Complex fd = (entropy_along_chart(chart, h, 1.0 + step)(0, 0) - entropy_along_chart(chart, h, 1.0 - step)(0, 0)) /
                     (2 * step);
  // first order in eps: Im(1/(1 + i eps)) = -eps / (1 + eps^2)
  EXPECT_NEAR(fd.imag(), 0.1, 0.1 * eps * eps * 1.01);
}

TEST(EntropyProductionTest, SecondLawSign) {
  for (double x : {0.0, 0.01, 0.3, 2.0}) {
    const auto h = build_hamiltonian(RandomHermitian{7, 3}, true);
    const auto out = entropy_production(h, wick_factor(x));
    for (const auto& r : out.mode_rates) EXPECT_GE(r.imag(), -1e-15);
    const auto diss = out.dissipative_part();
    EXPECT_LT((diss - (-wick_factor(x).epsilon) * h.matrix()).norm(), 1e-13);
  }
}

// --- uncertainty -------------------------------------------------------------

TEST(UncertaintyProductTest, StationaryState) {
  const auto s = entropy_operator(HermitianOperator::diagonal({0.0, 2.0}), 1.0);
  const auto a = HermitianOperator(Eigen::MatrixXcd::Constant(2, 2, 0.5));
  const auto rec = uncertainty_product(StateVector{1.0, 0.0}, s, a, 0.3);
  EXPECT_EQ(rec.delta_S, 0.0);
  EXPECT_TRUE(rec.stationary());
  EXPECT_TRUE(std::isinf(rec.delta_tau_A));
}

TEST(UncertaintyProductTest, TwoLevelSaturation) {
  // <A>(tau) = (1 + cos 2 tau) / 2 for the projector onto (1,1)/sqrt2.
  for (double kB : {1.0, 0.25}) {
    const Constants c{1.0, kB};
    const auto s = entropy_operator(HermitianOperator::diagonal({0.0, 2.0 * kB}), 1.0);
    const auto a = HermitianOperator(Eigen::MatrixXcd::Constant(2, 2, 0.5));
    const auto rec = uncertainty_product(StateVector{r2, r2}, s, a, pi / 4, c);
    EXPECT_NEAR(rec.delta_S, kB, 1e-14);
    EXPECT_NEAR(rec.delta_tau_A, 0.5, 1e-14);
    ASSERT_TRUE(rec.product.has_value());
    EXPECT_NEAR(*rec.product, kB / 2, 1e-10);
    EXPECT_NEAR(rec.convention_product, kB, 1e-14);
  }
}

TEST(UncertaintyProductTest, DerivativeMatchesFiniteDifference) {
  const auto s = entropy_operator(build_hamiltonian(RandomHermitian{6, 1}), 0.8);
  const HermitianOperator a(random_hermitian_matrix(6, 2));
  const auto psi = random_state(6, 3);
  const double tau = 0.6;
  auto mean_at = [&](double t) { return expectation(a, apply_exponential(s.S, Complex(0.0, t), psi)); };
  const double h = 1e-5;
  const double fd = (mean_at(tau + h) - mean_at(tau - h)) / (2 * h);
  EXPECT_NEAR(uncertainty_product(psi, s, a, tau).rate_A, std::abs(fd), 1e-8);
}

TEST(UncertaintyProductTest, MandelstamTammBound) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = entropy_operator(build_hamiltonian(RandomHermitian{8, seed}), 0.5 + rng::uniform(seed, 1, 0));
    const HermitianOperator a(random_hermitian_matrix(8, seed + 1000));
    const auto rec = uncertainty_product(random_state(8, seed + 2000), s, a, 3.0 * rng::uniform(seed, 1, 1));
    ASSERT_TRUE(rec.product.has_value());
    EXPECT_GE(*rec.product, 0.5 - 1e-12);
  }
}

TEST(SecondLaw, Classification) {
  const auto at = second_law_refinement(1.0);
  EXPECT_EQ(at.verdict, SecondLawVerdict::refined_law_holds);
  EXPECT_TRUE(at.at_boundary);
  EXPECT_EQ(second_law_refinement(0.0).verdict, SecondLawVerdict::below_refinement);
  EXPECT_EQ(second_law_refinement(2.0).verdict, SecondLawVerdict::refined_law_holds);
  EXPECT_FALSE(second_law_refinement(2.0).at_boundary);
  EXPECT_EQ(second_law_refinement(-0.1).verdict, SecondLawVerdict::negative);
  EXPECT_EQ(second_law_refinement(0.3, Constants{1.0, 0.25}).verdict, SecondLawVerdict::refined_law_holds);
}

// --- picture consistency -----------------------------------------------------

TEST(PictureConsistency, RealCTwoLevel) {
  const auto h = HermitianOperator::diagonal({0.0, 1.0});
  const auto cmp = picture_consistency(StateVector{r2, r2}, h, 1.0, PictureMode::real_C, uniform_grid(2.0, 4), 0.0);
  ASSERT_EQ(cmp.deviations.size(), 5u);
  EXPECT_LE(cmp.max_deviation, 1e-8);
  EXPECT_LE(cmp.max_ray_deviation, 1e-8);
}

TEST(PictureConsistency, RealCRejectsDissipation) {
  const auto h = HermitianOperator::diagonal({0.0, 1.0});
  EXPECT_THROW(picture_consistency(StateVector{r2, r2}, h, 1.0, PictureMode::real_C, {0.0, 1.0}, -0.1),
               InvalidArgument);
}

TEST(PictureConsistency, FrozenEigenstate) {
  const auto h = HermitianOperator::diagonal({0.0, 1.0});
  const auto cmp = picture_consistency(StateVector{0.0, 1.0}, h, 2.0, PictureMode::frozen_S, uniform_grid(3.0, 6), 0.0);
  EXPECT_LE(cmp.max_deviation, 1e-12);
  EXPECT_LE(cmp.max_ray_deviation, 1e-7);  // same ray, different global phase
}

TEST(PictureConsistency, ChartModeAgainstClosedForm) {
  const auto h = build_hamiltonian(RandomHermitian{6, 7}, true);
  const auto cmp = picture_consistency(random_state(6, 8), h, 1.5, PictureMode::chart_S, uniform_grid(1.0, 4), -0.05);
  EXPECT_LE(cmp.max_deviation, 1e-8);
}

TEST(PictureConsistency, ReadingsDiverge) {
  const auto h = build_hamiltonian(RandomHermitian{4, 1}, true);
  const double d = generator_reading_divergence(random_state(4, 2), h, 1.0, 1.0, -0.05);
  EXPECT_GT(d, 1e-3);
  EXPECT_EQ(generator_reading_divergence(random_state(4, 2), h, 1.0, 0.0, -0.05), 0.0);
}

TEST(PictureConsistency, ParseModes) {
  EXPECT_EQ(parse_picture_mode("chart_S"), PictureMode::chart_S);
  EXPECT_THROW(parse_picture_mode("bogus"), InvalidArgument);
}
