#pragma once

// The invariant suite run by `check-all` and by the acceptance driver.
// Every randomized input is derived from (seed, stream, index) so results do
// not depend on the worker count; ensembles run through parallel_for and are
// reduced sequentially.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "entropic/cli/format.hpp"
#include "entropic/cli/report.hpp"
#include "entropic/fluctuations.hpp"
#include "entropic/gravity.hpp"
#include "entropic/onsager.hpp"
#include "entropic/parallel.hpp"
#include "entropic/rng.hpp"
#include "entropic/spicture.hpp"
#include "entropic/symplectic.hpp"

namespace entropic::cli {

struct SuiteOptions {
  std::uint64_t seed = 7;
  unsigned workers = 1;
  Constants constants{};
};

struct Artifact {
  std::string file;
  std::string content;
};

struct CheckOutcome {
  CheckResult result;
  std::vector<Artifact> artifacts;
};

namespace suite {

// Independent streams per check.
enum Stream : std::uint64_t {
  kUnitary = 0x100,
  kSemigroup = 0x200,
  kDilatation = 0x300,
  kEigen = 0x400,
  kProduction = 0x500,
  kPictures = 0x600,
  kUncertainty = 0x700,
  kOnsager = 0x800,
  kFluct = 0x900,
  kStokes = 0xa00,
  kGravity = 0xb00,
};

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
  return rng::counter_hash(seed, stream, i);
}

inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t i, double lo, double hi) {
  return lo + (hi - lo) * rng::uniform(seed, stream, i);
}

// Random H with spectrum shifted to start at 0, read as S = H / T with T = 1.
inline HermitianOperator nonnegative_entropy(Index dim, std::uint64_t seed, const Constants& c) {
  return build_hamiltonian(RandomHermitian{dim, seed}, true, c).scaled(1.0, Unit::entropy);
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace suite

// 1. eps = 0: norm stays 1 over tau in [0, 50], dim 64.
inline CheckOutcome check_unitary_limit(const SuiteOptions& opt) {
  using namespace suite;
  const auto s = nonnegative_entropy(64, sub_seed(opt.seed, kUnitary, 0), opt.constants);
  const auto psi0 = random_state(64, sub_seed(opt.seed, kUnitary, 1));
  const auto traj = evolve_s(psi0, GeneratorSchedule::constant(s), uniform_grid(50.0, 200), 0.0, opt.constants);
  Csv csv("unitary_limit", {"step", "tau", "norm", "expect_S"});
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    worst = std::max(worst, std::abs(traj.norms[k] - 1.0));
    csv.field(k).field(traj.taus[k]).field(traj.norms[k]).field(traj.entropy_expectations[k]).end_row();
  }
  return {{1, "unitary_limit", worst <= 1e-12, worst, 1e-12, "<=", "max |norm - 1|, dim 64, tau in [0, 50]"},
          {{"unitary_limit.csv", csv.str()}}};
}

// 2. psi(t1 + t2) = psi(t2; psi(t1)) for 100 random (t1, t2, S).
inline CheckOutcome check_semigroup(const SuiteOptions& opt) {
  using namespace suite;
  constexpr std::size_t trials = 100;
  struct Row {
    Index dim;
    double t1, t2, eps, err;
  };
  std::vector<Row> rows(trials);
  parallel_for(trials, opt.workers, [&](std::size_t i) {
    const Index dim = 2 + Index(i % 15);
    const auto s = GeneratorSchedule::constant(nonnegative_entropy(dim, sub_seed(opt.seed, kSemigroup, 4 * i), opt.constants));
    const auto psi0 = random_state(dim, sub_seed(opt.seed, kSemigroup, 4 * i + 1));
    const double t1 = uniform(opt.seed, kSemigroup, 4 * i + 2, 0.0, 5.0);
    const double t2 = uniform(opt.seed, kSemigroup, 4 * i + 3, 0.0, 5.0);
    const double eps = -0.3 * rng::uniform(opt.seed, kSemigroup + 1, i);
    const auto first = evolve_s(psi0, s, {0.0, t1}, eps, opt.constants).states.back();
    const auto composed = evolve_s(first, s, {0.0, t2}, eps, opt.constants).states.back();
    const auto direct = evolve_s(psi0, s, {0.0, t1 + t2}, eps, opt.constants).states.back();
    rows[i] = {dim, t1, t2, eps, (composed.amplitudes() - direct.amplitudes()).norm() / direct.norm()};
  });
  Csv csv("semigroup", {"trial", "dim", "tau1", "tau2", "epsilon", "relative_error"});
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    worst = std::max(worst, rows[i].err);
    csv.field(i).field(static_cast<long long>(rows[i].dim)).field(rows[i].t1).field(rows[i].t2).field(rows[i].eps).field(rows[i].err).end_row();
  }
  return {{2, "semigroup_law", worst <= 1e-10, worst, 1e-10, "<=", "max relative composition error over 100 triples"},
          {{"semigroup.csv", csv.str()}}};
}

// 3. S >= 0: norm nondecreasing for eps < 0, nonincreasing for eps > 0.
inline CheckOutcome check_dilatation(const SuiteOptions& opt) {
  using namespace suite;
  constexpr std::size_t runs = 100;
  // worst step-to-step relative move against the expected direction
  std::vector<double> worst_dil(runs), worst_con(runs);
  EvolveSOptions anti;
  anti.allow_antidissipative = true;
  parallel_for(runs, opt.workers, [&](std::size_t i) {
    const Index dim = 2 + Index(i % 11);
    const auto s = GeneratorSchedule::constant(nonnegative_entropy(dim, sub_seed(opt.seed, kDilatation, 2 * i), opt.constants));
    const auto psi0 = random_state(dim, sub_seed(opt.seed, kDilatation, 2 * i + 1));
    const double mag = uniform(opt.seed, kDilatation + 1, i, 0.01, 0.5);
    const auto grid = uniform_grid(10.0, 50);
    const auto dil = evolve_s(psi0, s, grid, -mag, opt.constants);
    const auto con = evolve_s(psi0, s, grid, mag, opt.constants, anti);
    double wd = 0.0, wc = 0.0;
    for (std::size_t k = 1; k < grid.size(); ++k) {
      wd = std::max(wd, (dil.norms[k - 1] - dil.norms[k]) / dil.norms[k - 1]);
      wc = std::max(wc, (con.norms[k] - con.norms[k - 1]) / con.norms[k - 1]);
    }
    worst_dil[i] = wd;
    worst_con[i] = wc;
  });
  Csv csv("dilatation", {"run", "worst_dilatation_decrease", "worst_contraction_increase"});
  double worst = 0.0;
  for (std::size_t i = 0; i < runs; ++i) {
    worst = std::max({worst, worst_dil[i], worst_con[i]});
    csv.field(i).field(worst_dil[i]).field(worst_con[i]).end_row();
  }
  // 1e-14 relative: rounding slack for the zero mode of the shifted spectrum
  return {{3, "dilatation_contraction", worst <= 1e-14, worst, 1e-14, "<=",
           "largest relative step against the expected monotone direction, 100 runs x 2 signs"},
          {{"dilatation.csv", csv.str()}}};
}

// 4. eigen_solution vs evolve_s on an (s, tau, eps) grid of 200 points.
inline CheckOutcome check_eigen_solutions(const SuiteOptions& opt) {
  using namespace suite;
  const auto sop = nonnegative_entropy(8, sub_seed(opt.seed, kEigen, 0), opt.constants);
  const auto schedule = GeneratorSchedule::constant(sop);
  const std::vector<double> taus{0.0, 0.25, 0.5, 1.0, 2.0};
  const std::vector<double> epss{0.0, -0.01, -0.1, -0.3, -0.6};
  Csv csv("eigen_solutions", {"s", "tau", "epsilon", "max_abs_error"});
  double worst = 0.0;
  std::size_t points = 0;
  for (const auto& spec : eigen_solution_specs(sop, opt.constants)) {
    for (double eps : epss) {
      const auto traj = evolve_s(spec.chi(), schedule, taus, eps, opt.constants);
      for (std::size_t k = 0; k < taus.size(); ++k) {
        const double err = max_abs_diff(traj.states[k], eigen_solution(spec, taus[k], eps));
        worst = std::max(worst, err);
        ++points;
        csv.field(spec.s()).field(taus[k]).field(eps).field(err).end_row();
      }
    }
  }
  return {{4, "eigen_solution_identity", worst <= 1e-10 && points >= 200, worst, 1e-10, "<=",
           std::to_string(points) + " (s, tau, eps) points"},
          {{"eigen_solutions.csv", csv.str()}}};
}

// 5. Im(dS/dt) from a central difference of the chart vs -eps kB H / hbar.
inline CheckOutcome check_entropy_production(const SuiteOptions& opt) {
  using namespace suite;
  const Constants& c = opt.constants;
  Csv csv("entropy_production", {"pair", "dim", "x", "epsilon", "fd_relative_error", "closed_form_relative_error"});
  double worst = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    const Index dim = 2 + Index(i % 7);
    const auto h = build_hamiltonian(RandomHermitian{dim, sub_seed(opt.seed, kProduction, i)}, false, c);
    // weak field: eps^2 < 1e-6 keeps Im(1/(1 + i eps)) = -eps (1 - eps^2 + ...) inside tolerance,
    // and x >= 5e-5 keeps the cancellation error of the difference quotient well below it
    const double x = uniform(opt.seed, kProduction + 1, i, 5e-5, 6e-4);
    const WickFactor w = wick_factor(x);
    const ThermalTimeChart chart{1.0, Complex(1.0, w.epsilon), c};
    const double step = 1e-4;
    const Eigen::MatrixXcd fd =
        (entropy_along_chart(chart, h, 1.0 + step) - entropy_along_chart(chart, h, 1.0 - step)) / (2.0 * step);
    const Eigen::MatrixXcd target = (-w.epsilon * c.kB / c.hbar) * h.matrix();
    const double fd_err = (antihermitian_part(fd) - target).norm() / target.norm();
    const double cf_err = (entropy_production(h, w, c).dissipative_part() - target).norm() / target.norm();
    worst = std::max({worst, fd_err, cf_err});
    csv.field(i).field(static_cast<long long>(dim)).field(x).field(w.epsilon).field(fd_err).field(cf_err).end_row();
  }
  return {{5, "entropy_production_oracle", worst <= 1e-6, worst, 1e-6, "<=",
           "max relative error of Im(dS/dt), step 1e-4, 20 (eps, H) pairs"},
          {{"entropy_production.csv", csv.str()}}};
}

// 6. real_C: tau integration reproduces the t picture.
inline CheckOutcome check_picture_consistency(const SuiteOptions& opt) {
  using namespace suite;
  const double r2 = std::sqrt(0.5);
  const auto grid = uniform_grid(2.0, 8);
  const auto two = picture_consistency(StateVector{r2, r2}, HermitianOperator::diagonal({0.0, 1.0}), 1.0,
                                       PictureMode::real_C, grid, 0.0, opt.constants);
  const auto h16 = build_hamiltonian(RandomHermitian{16, sub_seed(opt.seed, kPictures, 0)}, false, opt.constants);
  const auto big = picture_consistency(random_state(16, sub_seed(opt.seed, kPictures, 1)), h16, 1.0,
                                       PictureMode::real_C, grid, 0.0, opt.constants);
  Csv csv("picture_consistency", {"case", "step", "tau", "t", "deviation", "ray_deviation"});
  for (const auto* cmp : {&two, &big}) {
    for (std::size_t k = 0; k < cmp->taus.size(); ++k) {
      csv.field(cmp == &two ? "two_level" : "random_16").field(k).field(cmp->taus[k]).field(cmp->times[k].real());
      csv.field(cmp->deviations[k]).field(cmp->ray_deviations[k]).end_row();
    }
  }
  const double worst = std::max(two.max_deviation, big.max_deviation);
  return {{6, "picture_consistency_real_C", worst <= 1e-8, worst, 1e-8, "<=",
           "two-level and dim-16 random H, tau in [0, 2]"},
          {{"picture_consistency.csv", csv.str()}}};
}

// 7. Mandelstam-Tamm product >= kB/2 on 1000 unitary samples; two-level saturation.
inline CheckOutcome check_uncertainty(const SuiteOptions& opt) {
  using namespace suite;
  const Constants& c = opt.constants;
  constexpr std::size_t samples = 1000;
  std::vector<double> products(samples, std::numeric_limits<double>::infinity());
  parallel_for(samples, opt.workers, [&](std::size_t i) {
    const Index dim = 2 + Index(i % 7);
    const double temp = uniform(opt.seed, kUncertainty, i, 0.5, 1.5);
    const auto s = entropy_operator(build_hamiltonian(RandomHermitian{dim, sub_seed(opt.seed, kUncertainty + 1, i)}, false, c), temp);
    const HermitianOperator a(random_hermitian_matrix(dim, sub_seed(opt.seed, kUncertainty + 2, i)));
    const auto psi = random_state(dim, sub_seed(opt.seed, kUncertainty + 3, i));
    const double tau = uniform(opt.seed, kUncertainty + 4, i, 0.0, 3.0);
    const auto rec = uncertainty_product(psi, s, a, tau, c);
    if (rec.product) products[i] = *rec.product;
  });
  Csv csv("uncertainty", {"sample", "product_over_kB"});
  double margin = std::numeric_limits<double>::infinity();
  std::size_t stationary = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    if (std::isinf(products[i])) ++stationary;
    margin = std::min(margin, products[i] - 0.5 * c.kB);
    csv.field(i).field(products[i] / c.kB).end_row();
  }

  const double r2 = std::sqrt(0.5);
  const auto s2 = entropy_operator(HermitianOperator::diagonal({0.0, 2.0 * c.kB}), 1.0);
  const HermitianOperator proj(Eigen::MatrixXcd::Constant(2, 2, 0.5));
  const auto sat = uncertainty_product(StateVector{r2, r2}, s2, proj, std::numbers::pi / 4, c);
  const double sat_err = sat.product ? std::abs(*sat.product - 0.5 * c.kB) : std::numeric_limits<double>::infinity();

  const bool ok = margin >= -1e-12 && sat_err <= 1e-10;
  return {{7, "uncertainty_mandelstam_tamm", ok, margin, -1e-12, ">=",
           "min(product - kB/2) over 1000 samples (" + std::to_string(stationary) +
               " stationary); two-level saturation error " + format_double(sat_err) + " (tol 1e-10)"},
          {{"uncertainty.csv", csv.str()}}};
}

// 8. ydot^T R ydot = Y^T L Y on 1000 random SPD systems; Sdot >= 0 along relax.
inline CheckOutcome check_onsager_forms(const SuiteOptions& opt) {
  using namespace suite;
  constexpr std::size_t systems = 1000;
  std::vector<double> rel(systems), min_rate(systems);
  parallel_for(systems, opt.workers, [&](std::size_t i) {
    const auto sys = onsager::random_system(1 + Index(i % 8), sub_seed(opt.seed, kOnsager, 0), i);
    const auto r = onsager::entropy_rate(sys, sys.y0());
    rel[i] = std::abs(r.via_velocities - r.via_forces) / std::max(std::abs(r.via_velocities), std::abs(r.via_forces));
    const auto traj = onsager::relax(sys, uniform_grid(5.0, 20));
    min_rate[i] = *std::min_element(traj.entropy_rates.begin(), traj.entropy_rates.end());
  });
  Csv csv("onsager_forms", {"system", "dim", "relative_form_difference", "min_entropy_rate"});
  double worst = 0.0, lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < systems; ++i) {
    worst = std::max(worst, rel[i]);
    lowest = std::min(lowest, min_rate[i]);
    csv.field(i).field(static_cast<long long>(1 + i % 8)).field(rel[i]).field(min_rate[i]).end_row();
  }
  return {{8, "onsager_forms", worst <= 1e-12 && lowest >= 0.0, worst, 1e-12, "<=",
           "max relative form difference over 1000 systems; min Sdot along relax " + format_double(lowest) +
               " (must be >= 0)"},
          {{"onsager_forms.csv", csv.str()}}};
}

// 9. <dS dT>/(kB T0) and <dS dtau>/kB equal 1 within 3 standard errors at n = 10^6.
inline CheckOutcome check_fluctuations(const SuiteOptions& opt) {
  using namespace suite;
  const auto ref = fluctuations::ThermoReference::ideal_gas(2.0, 3.0, 1e4);
  const auto samples =
      fluctuations::gaussian_sample(ref, 1'000'000, sub_seed(opt.seed, kFluct, 0), opt.constants, opt.workers);
  const auto rep = fluctuations::covariance_report(samples, ref, opt.constants);
  auto z = [](const fluctuations::Estimate& e, double target) { return std::abs(e.mean - target) / e.std_error; };
  const double worst = std::max(z(rep.ds_dt_over_kBT, 1.0), z(rep.ds_dtau_over_kB, 1.0));
  Csv csv("fluctuation_covariance", {"quantity", "mean", "std_error", "n"});
  auto row = [&](const char* name, const fluctuations::Estimate& e) {
    csv.field(name).field(e.mean).field(e.std_error).field(e.n).end_row();
  };
  row("ds_dt_over_kBT", rep.ds_dt_over_kBT);
  row("ds_dtau_over_kB", rep.ds_dtau_over_kB);
  row("dp_dV_over_kBT", rep.dp_dV_over_kBT);
  row("dT_dV_standardized", rep.dT_dV);
  row("quadratic_form_over_kBT", rep.quadratic_form);
  Csv head("fluctuation_samples_head", {"dp", "dV", "dT", "dS"});
  for (std::size_t i = 0; i < 1000; ++i) head.field(samples[i].dp).field(samples[i].dV).field(samples[i].dT).field(samples[i].dS).end_row();
  return {{9, "fluctuation_covariance", worst <= 3.0, worst, 3.0, "<=",
           "max |mean - 1| in standard errors for <dS dT>/(kB T0) = " + format_double(rep.ds_dt_over_kBT.mean) +
               " and <dS dtau>/kB = " + format_double(rep.ds_dtau_over_kB.mean) + ", n = 10^6"},
          {{"fluctuation_covariance.csv", csv.str()}, {"fluctuation_samples_head.csv", head.str()}}};
}

// 10. Stokes: |area - boundary_action| converges at order >= 1.9.
inline CheckOutcome check_stokes(const SuiteOptions& opt) {
  using namespace suite;
  std::vector<std::pair<std::string, symplectic::SymplecticPatch>> patches;
  patches.emplace_back("disk", symplectic::disk_patch(0.5));
  for (std::uint64_t i = 0; i < 10; ++i)
    patches.emplace_back("random_" + std::to_string(i), symplectic::random_smooth_patch(sub_seed(opt.seed, kStokes, 0), i));
  std::vector<symplectic::StokesStudy> studies(patches.size());
  parallel_for(patches.size(), opt.workers,
               [&](std::size_t i) { studies[i] = symplectic::stokes_convergence(patches[i].second, 64, 3); });
  Csv csv("stokes", {"patch", "resolution", "error", "order"});
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const auto& st = studies[i];
    worst = std::min(worst, st.min_order());
    for (std::size_t k = 0; k < st.errors.size(); ++k) {
      csv.field(patches[i].first).field(st.resolutions[k]).field(st.errors[k]);
      if (k == 0)
        csv.field("");
      else
        csv.field(st.orders[k - 1]);
      csv.end_row();
    }
  }
  return {{10, "stokes_identity", worst >= 1.9, worst, 1.9, ">=",
           "min order over disk + 10 random patches, resolutions 64..512"},
          {{"stokes.csv", csv.str()}}};
}

// 11. h -> 4M/r for r >= 10 source extents; vacuum Laplacian residual order >= 1.9.
inline CheckOutcome check_gravity(const SuiteOptions& opt) {
  using namespace suite;
  using gravity::Vec3;
  const double spacing = 1.0 / 32;
  const double o = -0.5 * spacing * 15;
  const auto src = gravity::rasterize({16, 16, 16}, spacing, Vec3::Constant(o), {gravity::UniformBall{Vec3::Zero(), 0.25, 1.0}});
  const double m = src.total_mass();
  Vec3 centroid = Vec3::Zero();
  for (const auto& cell : src.support()) centroid += cell.mass * cell.center;
  centroid /= m;
  double extent = 0.0;
  for (const auto& cell : src.support())
    extent = std::max(extent, (cell.center - centroid).norm() + 0.5 * std::sqrt(3.0) * spacing);

  Csv csv("gravity", {"kind", "r_over_extent", "x", "y", "z", "value", "reference"});
  double falloff = 0.0;
  std::size_t k = 0;
  for (double factor : {10.0, 20.0, 40.0}) {
    for (int d = 0; d < 5; ++d, ++k) {
      const Vec3 dir = gravity::detail::unit_direction(sub_seed(opt.seed, kGravity, 0), k);
      const Vec3 p = centroid + factor * extent * dir;
      const double h = gravity::trace_potential(src, p);
      const double ref = 4.0 * m / (p - centroid).norm();
      falloff = std::max(falloff, std::abs(h / ref - 1.0));
      csv.field("falloff").field(factor).field(p.x()).field(p.y()).field(p.z()).field(h).field(ref).end_row();
    }
  }

  const auto point = gravity::rasterize({11, 11, 11}, 0.5, Vec3::Constant(-2.5), {gravity::PointMass{Vec3::Zero(), 1.0}});
  const Vec3 probe(2.0, 0.3, 0.1);
  std::vector<double> residuals;
  for (double step : {0.2, 0.1, 0.05}) {
    residuals.push_back(gravity::laplacian_spot_check(point, probe, step));
    csv.field("laplacian").field(step).field(probe.x()).field(probe.y()).field(probe.z()).field(residuals.back()).field(0.0).end_row();
  }
  const double order = std::min(std::log2(std::abs(residuals[0] / residuals[1])), std::log2(std::abs(residuals[1] / residuals[2])));

  const double x = gravity::mean_h(src, {gravity::Ball{Vec3(3.0, 0.0, 0.0), 1.0}, 20000}, sub_seed(opt.seed, kGravity, 1), opt.workers);
  csv.field("mean_h_ball").field(0.0).field(3.0).field(0.0).field(0.0).field(x).field(wick_factor(x).epsilon).end_row();

  return {{11, "gravity_falloff_and_laplacian", falloff <= 0.01 && order >= 1.9, falloff, 0.01, "<=",
           "max |h r / 4M - 1| at r >= 10 extents; Laplacian residual order " + format_double(order) + " (>= 1.9)"},
          {{"gravity.csv", csv.str()}}};
}

inline const std::vector<std::function<CheckOutcome(const SuiteOptions&)>>& suite_checks() {
  static const std::vector<std::function<CheckOutcome(const SuiteOptions&)>> checks{
      check_unitary_limit,      check_semigroup,           check_dilatation,  check_eigen_solutions,
      check_entropy_production, check_picture_consistency, check_uncertainty, check_onsager_forms,
      check_fluctuations,       check_stokes,              check_gravity};
  return checks;
}

// A check that throws is reported as a failure carrying the exception text.
inline CheckOutcome run_check(std::size_t index, const SuiteOptions& opt) {
  try {
    return suite_checks().at(index)(opt);
  } catch (const std::exception& e) {
    CheckOutcome out;
    out.result = {int(index) + 1, "check_" + std::to_string(index + 1), false, std::nan(""), 0.0, "", std::string("error: ") + e.what()};
    return out;
  }
}

inline std::vector<CheckOutcome> run_suite(const SuiteOptions& opt) {
  std::vector<CheckOutcome> out;
  for (std::size_t i = 0; i < suite_checks().size(); ++i) out.push_back(run_check(i, opt));
  return out;
}

}  // namespace entropic::cli
