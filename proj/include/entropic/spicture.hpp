#pragma once

// Entropy picture: Wick factor, thermal-time chart, entropy operator S = H/T,
// the nonunitary semigroup generated by S in thermal time tau, its
// eigen-solutions, entropy production, and uncertainty products.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/grid.hpp"
#include "entropic/hpicture.hpp"
#include "entropic/opcore.hpp"

namespace entropic {

// ---------------------------------------------------------------------------
// Wick factor

struct WickFactor {
  double x = 0.0;        // gravity strength, >= 0
  double phi = 0.0;      // rotation angle in [-pi/2, 0]
  Complex c{1.0, 0.0};   // e^{i phi}
  double epsilon = 0.0;  // weak-field parameter -pi x / 2
};

// phi(x) = -(pi/2)(1 - e^{-x}); C = e^{i phi}; weak field C ~ 1 + i eps.
inline WickFactor wick_factor(double x) {
  detail::require(std::isfinite(x), "wick_factor: x must be finite");
  detail::require(x >= 0.0, "wick_factor: x must be >= 0");
  WickFactor w;
  w.x = x;
  w.phi = std::numbers::pi / 2.0 * std::expm1(-x);
  w.c = std::polar(1.0, w.phi);
  w.epsilon = -std::numbers::pi * x / 2.0;
  return w;
}

// ---------------------------------------------------------------------------
// Entropy operator

struct EntropyOperator {
  HermitianOperator S;  // J/K
  double temperature;   // K
  HermitianOperator source_H;
};

inline EntropyOperator entropy_operator(const HermitianOperator& h, double temperature) {
  detail::require(std::isfinite(temperature) && temperature > 0.0, "entropy_operator: temperature must be > 0");
  return EntropyOperator{h.scaled(1.0 / temperature, Unit::entropy), temperature, h};
}

// ---------------------------------------------------------------------------
// Thermal-time chart: C / t = kB T / hbar and tau = ln(T / T0).

struct ThermalTimeChart {
  double T0 = 1.0;
  Complex c{1.0, 0.0};
  Constants constants{};

  void validate() const {
    constants.validate();
    detail::require(std::isfinite(T0) && T0 > 0.0, "ThermalTimeChart: T0 must be > 0");
    detail::require(std::isfinite(c.real()) && std::isfinite(c.imag()) && std::abs(c) > 0.0,
                    "ThermalTimeChart: C must be finite and nonzero");
  }

  bool has_real_factor() const { return std::abs(c.imag()) <= 1e-12 * std::abs(c); }
};

// Temperature reached at clock time t. Only the real-C branch maps a real
// time to a real temperature; complex C is rejected here (use
// chart_tau_to_t for the complex-valued inverse map).
inline double chart_t_to_T(const ThermalTimeChart& chart, double t) {
  chart.validate();
  detail::require(std::isfinite(t) && t > 0.0, "chart_t_to_T: t must be > 0");
  detail::require(chart.has_real_factor(), "chart_t_to_T: complex C has no real temperature branch");
  const double T = chart.constants.hbar * chart.c.real() / (chart.constants.kB * t);
  detail::require(T > 0.0, "chart_t_to_T: C must be positive for a positive temperature");
  return T;
}

inline double chart_T_to_tau(const ThermalTimeChart& chart, double temperature) {
  chart.validate();
  detail::require(std::isfinite(temperature) && temperature > 0.0, "chart_T_to_tau: T must be > 0");
  return std::log(temperature / chart.T0);
}

// t(tau) = hbar C / (kB T0 e^tau); complex whenever C is.
inline Complex chart_tau_to_t(const ThermalTimeChart& chart, double tau) {
  chart.validate();
  detail::require(std::isfinite(tau), "chart_tau_to_t: tau must be finite");
  return chart.constants.hbar * chart.c / (chart.constants.kB * chart.T0 * std::exp(tau));
}

// S(t) = H / T(t) = kB t H / (hbar C), the entropy operator seen along the
// chart as a function of real clock time.
inline Eigen::MatrixXcd entropy_along_chart(const ThermalTimeChart& chart, const HermitianOperator& h, double t) {
  chart.validate();
  return (chart.constants.kB * t / chart.constants.hbar) / chart.c * h.matrix();
}

// ---------------------------------------------------------------------------
// Semigroup evolution in tau

class GeneratorSchedule {
 public:
  using Callable = std::function<HermitianOperator(double)>;

  static GeneratorSchedule constant(HermitianOperator s) { return GeneratorSchedule(std::move(s)); }

  // tau -> S(tau); must be side-effect free. Integrated with ordered
  // midpoint products.
  static GeneratorSchedule piecewise(Callable fn) {
    detail::require(static_cast<bool>(fn), "GeneratorSchedule::piecewise: empty callable");
    GeneratorSchedule g(fn(0.0));
    g.fn_ = std::move(fn);
    return g;
  }

  bool is_constant() const { return !fn_; }
  Index dim() const { return probe_.dim(); }
  HermitianOperator at(double tau) const { return fn_ ? fn_(tau) : probe_; }

 private:
  explicit GeneratorSchedule(HermitianOperator s) : probe_(std::move(s)) {}

  HermitianOperator probe_;
  Callable fn_;
};

enum class SFlow {
  // exp((i - eps)/kB * int S): the semigroup form, first order in eps.
  semigroup,
  // exact solution of -(i + eps) kB dpsi/dtau = S psi, i.e. the semigroup
  // exponent divided by (1 + eps^2).
  entropic_schrodinger,
};

inline SFlow parse_sflow(std::string_view s) {
  if (s == "semigroup") return SFlow::semigroup;
  if (s == "entropic_schrodinger") return SFlow::entropic_schrodinger;
  throw InvalidArgument("unknown flow '" + std::string(s) + "'");
}

struct EvolveSOptions {
  bool allow_antidissipative = false;
  SFlow flow = SFlow::semigroup;
  double rtol = 1e-8;
  int max_halvings = 22;
  bool richardson = true;
};

struct STrajectory {
  std::vector<double> taus;
  std::vector<StateVector> states;
  std::vector<double> norms;
  std::vector<double> entropy_expectations;

  std::size_t size() const { return taus.size(); }
};

// Coefficient g in dpsi/dtau = g S psi.
inline Complex s_flow_rate(double epsilon, SFlow flow, const Constants& constants) {
  Complex g = Complex(-epsilon, 1.0) / constants.kB;
  if (flow == SFlow::entropic_schrodinger) g /= 1.0 + epsilon * epsilon;
  return g;
}

namespace detail {

inline Eigen::VectorXcd ordered_midpoint_product(const GeneratorSchedule& schedule, const Eigen::VectorXcd& psi,
                                                 double a, double b, long substeps, Complex g) {
  const double h = (b - a) / static_cast<double>(substeps);
  Eigen::VectorXcd v = psi;
  for (long j = 0; j < substeps; ++j) {
    const double mid = a + (static_cast<double>(j) + 0.5) * h;
    const HermitianOperator s = schedule.at(mid);
    require_dims(s.dim(), v.size(), "evolve_s: schedule");
    v = apply_exponential(spectral_decompose(s), g * h, StateVector(v)).amplitudes();
  }
  return v;
}

// Step halving until two successive products agree within rtol; the
// returned value is the Richardson combination of the last pair (the
// midpoint product is symmetric, so its error series is even in h).
inline Eigen::VectorXcd refine_interval(const GeneratorSchedule& schedule, const Eigen::VectorXcd& psi, double a,
                                        double b, Complex g, const EvolveSOptions& opt) {
  long m = 1;
  Eigen::VectorXcd coarse = ordered_midpoint_product(schedule, psi, a, b, m, g);
  for (int halving = 0; halving < opt.max_halvings; ++halving) {
    m *= 2;
    Eigen::VectorXcd fine = ordered_midpoint_product(schedule, psi, a, b, m, g);
    const double diff = (fine - coarse).norm();
    if (diff <= opt.rtol * fine.norm()) {
      if (opt.richardson) return (4.0 * fine - coarse) / 3.0;
      return fine;
    }
    coarse = std::move(fine);
  }
  throw NumericalError("evolve_s: ordered product did not converge on [" + std::to_string(a) + ", " +
                       std::to_string(b) + "]");
}

}  // namespace detail

// psi(tau) = T exp(g int_0^tau S) psi0 with g = (i - eps)/kB (semigroup
// flow). Constant generators use the exact spectral exponential.
inline STrajectory evolve_s(const StateVector& psi0, const GeneratorSchedule& schedule,
                            const std::vector<double>& tau_grid, double epsilon, const Constants& constants = {},
                            const EvolveSOptions& options = {}) {
  constants.validate();
  detail::require(std::isfinite(epsilon), "evolve_s: epsilon must be finite");
  if (epsilon > 0.0 && !options.allow_antidissipative) {
    throw InvalidArgument("evolve_s: epsilon > 0 describes an antidissipative evolution; set allow_antidissipative");
  }
  detail::require(options.rtol > 0.0, "evolve_s: rtol must be > 0");
  detail::require_dims(schedule.dim(), psi0.dim(), "evolve_s");
  detail::require_grid_from_zero(tau_grid, "evolve_s");

  const Complex g = s_flow_rate(epsilon, options.flow, constants);
  STrajectory traj;
  traj.taus = tau_grid;
  traj.states.reserve(tau_grid.size());

  auto record = [&](StateVector psi, double tau) {
    traj.norms.push_back(psi.norm());
    traj.entropy_expectations.push_back(expectation(schedule.at(tau), psi));
    traj.states.push_back(std::move(psi));
  };

  if (schedule.is_constant()) {
    const SpectralDecomposition eig = spectral_decompose(schedule.at(0.0));
    for (double tau : tau_grid) record(apply_exponential(eig, g * tau, psi0), tau);
    return traj;
  }

  Eigen::VectorXcd v = psi0.amplitudes();
  record(psi0, tau_grid.front());
  for (std::size_t k = 1; k < tau_grid.size(); ++k) {
    v = detail::refine_interval(schedule, v, tau_grid[k - 1], tau_grid[k], g, options);
    if (!v.allFinite()) throw NumericalError("evolve_s: state overflowed");
    record(StateVector(v), tau_grid[k]);
  }
  return traj;
}

// Relative residual of -(i + eps) kB dpsi/dtau = S psi at each interval
// midpoint, with dpsi/dtau from the central difference of consecutive
// trajectory states.
inline std::vector<double> entropic_schrodinger_residuals(const STrajectory& traj, const GeneratorSchedule& schedule,
                                                          double epsilon, const Constants& constants = {}) {
  std::vector<double> out;
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const double dt = traj.taus[k] - traj.taus[k - 1];
    const Eigen::VectorXcd& a = traj.states[k - 1].amplitudes();
    const Eigen::VectorXcd& b = traj.states[k].amplitudes();
    const Eigen::VectorXcd deriv = (b - a) / dt;
    const Eigen::VectorXcd mid = 0.5 * (a + b);
    const Eigen::VectorXcd s_psi = schedule.at(0.5 * (traj.taus[k] + traj.taus[k - 1])).matrix() * mid;
    const Eigen::VectorXcd lhs = -Complex(epsilon, 1.0) * constants.kB * deriv;
    out.push_back((lhs - s_psi).norm() / s_psi.norm());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorized eigen-solutions psi = chi e^{(i - eps) tau s}, S chi = s kB chi.

class EigenSolutionSpec {
 public:
  static EigenSolutionSpec create(const HermitianOperator& s_op, StateVector chi, double s,
                                  const Constants& constants = {}) {
    constants.validate();
    detail::require_dims(s_op.dim(), chi.dim(), "EigenSolutionSpec");
    detail::require(std::isfinite(s), "EigenSolutionSpec: s must be finite");
    const double residual = (s_op.matrix() * chi.amplitudes() - s * constants.kB * chi.amplitudes()).norm();
    if (residual > 1e-10 * s_op.matrix().norm() * chi.norm()) {
      throw InvalidArgument("EigenSolutionSpec: S chi != s kB chi (residual " + std::to_string(residual) + ")");
    }
    return EigenSolutionSpec(std::move(chi), s);
  }

  const StateVector& chi() const { return chi_; }
  double s() const { return s_; }

 private:
  EigenSolutionSpec(StateVector chi, double s) : chi_(std::move(chi)), s_(s) {}

  StateVector chi_;
  double s_;
};

inline std::vector<EigenSolutionSpec> eigen_solution_specs(const HermitianOperator& s_op,
                                                           const Constants& constants = {}) {
  const SpectralDecomposition eig = spectral_decompose(s_op);
  std::vector<EigenSolutionSpec> out;
  for (Index k = 0; k < eig.dim(); ++k) {
    out.push_back(EigenSolutionSpec::create(s_op, StateVector(eig.eigenvectors.col(k)),
                                            eig.eigenvalues(k) / constants.kB, constants));
  }
  return out;
}

inline StateVector eigen_solution(const EigenSolutionSpec& spec, double tau, double epsilon) {
  detail::require(std::isfinite(tau) && std::isfinite(epsilon), "eigen_solution: tau and epsilon must be finite");
  const Complex factor = std::exp(Complex(-epsilon, 1.0) * tau * spec.s());
  detail::require(std::isfinite(factor.real()) && std::isfinite(factor.imag()), "eigen_solution: overflow");
  return StateVector(spec.chi().amplitudes() * factor);
}

// ---------------------------------------------------------------------------
// Entropy production dS/dt = (kB/hbar)(1 - i eps) H

struct EntropyProduction {
  std::vector<double> energies;        // eigenvalues h of H, ascending
  std::vector<Complex> mode_rates;     // (kB/hbar)(1 - i eps) h
  Eigen::MatrixXcd operator_rate;      // (kB/hbar)(1 - i eps) H
  Complex coefficient;                 // (kB/hbar)(1 - i eps)

  // Im(dS/dt) as a Hermitian operator: -eps kB H / hbar.
  Eigen::MatrixXcd dissipative_part() const { return antihermitian_part(operator_rate); }
};

inline EntropyProduction entropy_production(const HermitianOperator& h, const WickFactor& wick,
                                            const Constants& constants = {}) {
  constants.validate();
  EntropyProduction out;
  out.coefficient = constants.kB / constants.hbar * Complex(1.0, -wick.epsilon);
  const SpectralDecomposition eig = spectral_decompose(h);
  for (Index k = 0; k < eig.dim(); ++k) {
    out.energies.push_back(eig.eigenvalues(k));
    out.mode_rates.push_back(out.coefficient * eig.eigenvalues(k));
  }
  out.operator_rate = out.coefficient * h.matrix();
  return out;
}

// ---------------------------------------------------------------------------
// Uncertainty products (unitary case eps = 0)

struct UncertaintyProduct {
  double delta_S = 0.0;
  double delta_A = 0.0;
  double rate_A = 0.0;  // |d<A>/dtau| at the probe
  double delta_tau_A = std::numeric_limits<double>::infinity();
  std::optional<double> product;  // delta_S * delta_tau_A; empty when <A> is stationary
  double convention_product = 0.0;  // delta_S * 1

  bool stationary() const { return !product.has_value(); }
  bool meets(double threshold) const { return product && *product >= threshold; }
};

inline constexpr double kStationaryRate = 1e-14;

// Delta_tau_A = Delta_A / |d<A>/dtau| (Mandelstam-Tamm) with the derivative
// taken exactly from dpsi/dtau = (i/kB) S psi at tau_probe.
inline UncertaintyProduct uncertainty_product(const StateVector& psi, const EntropyOperator& s,
                                              const HermitianOperator& a, double tau_probe,
                                              const Constants& constants = {}) {
  constants.validate();
  detail::require_dims(s.S.dim(), psi.dim(), "uncertainty_product");
  detail::require_dims(a.dim(), psi.dim(), "uncertainty_product");
  detail::require(psi.norm() > 0.0, "uncertainty_product: zero state vector");
  detail::require(std::isfinite(tau_probe), "uncertainty_product: tau_probe must be finite");

  const StateVector at_probe = apply_exponential(s.S, Complex(0.0, tau_probe / constants.kB), psi);
  const Eigen::VectorXcd velocity = Complex(0.0, 1.0 / constants.kB) * (s.S.matrix() * at_probe.amplitudes());
  const double n2 = at_probe.amplitudes().squaredNorm();

  UncertaintyProduct out;
  out.delta_S = uncertainty(s.S, at_probe);
  out.delta_A = uncertainty(a, at_probe);
  out.rate_A = std::abs(2.0 * at_probe.amplitudes().dot(a.matrix() * velocity).real() / n2);
  out.convention_product = out.delta_S;
  if (out.rate_A >= kStationaryRate) {
    out.delta_tau_A = out.delta_A / out.rate_A;
    out.product = out.delta_S * out.delta_tau_A;
  }
  return out;
}

enum class SecondLawVerdict {
  refined_law_holds,   // Delta_S >= kB
  below_refinement,    // 0 <= Delta_S < kB: satisfies Delta_S >= 0 only
  negative,            // Delta_S < 0, flagged
};

inline std::string_view to_string(SecondLawVerdict v) {
  switch (v) {
    case SecondLawVerdict::refined_law_holds: return "refined_law_holds";
    case SecondLawVerdict::below_refinement: return "below_refinement";
    case SecondLawVerdict::negative: return "negative";
  }
  return "unknown";
}

struct SecondLawClassification {
  SecondLawVerdict verdict;
  bool at_boundary;  // Delta_S == kB within 1e-12 relative
};

inline SecondLawClassification second_law_refinement(double delta_S, const Constants& constants = {}) {
  constants.validate();
  detail::require(std::isfinite(delta_S), "second_law_refinement: Delta_S must be finite");
  SecondLawClassification out{};
  if (delta_S >= constants.kB)
    out.verdict = SecondLawVerdict::refined_law_holds;
  else if (delta_S >= 0.0)
    out.verdict = SecondLawVerdict::below_refinement;
  else
    out.verdict = SecondLawVerdict::negative;
  out.at_boundary = std::abs(delta_S - constants.kB) <= 1e-12 * constants.kB;
  return out;
}

// ---------------------------------------------------------------------------
// Picture consistency

enum class PictureMode {
  real_C,    // C = 1, eps = 0: tau integration must reproduce the t picture
  frozen_S,  // S held at H / T0
  chart_S,   // S(tau) = H e^{-tau} / T0
};

inline PictureMode parse_picture_mode(std::string_view s) {
  if (s == "real_C") return PictureMode::real_C;
  if (s == "frozen_S") return PictureMode::frozen_S;
  if (s == "chart_S") return PictureMode::chart_S;
  throw InvalidArgument("unknown picture mode '" + std::string(s) + "'");
}

inline std::string_view to_string(PictureMode m) {
  switch (m) {
    case PictureMode::real_C: return "real_C";
    case PictureMode::frozen_S: return "frozen_S";
    case PictureMode::chart_S: return "chart_S";
  }
  return "unknown";
}

struct PictureComparison {
  std::vector<double> taus;
  std::vector<Complex> times;              // matched clock times t(tau)
  std::vector<double> deviations;          // primary comparison, relative to ||psi0||
  std::vector<double> ray_deviations;      // phase/norm-insensitive distance to the t-picture state
  double max_deviation = 0.0;
  double max_ray_deviation = 0.0;
};

// min_theta || a/|a| - e^{i theta} b/|b| ||
inline double ray_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const double overlap = std::abs(a.dot(b)) / (a.norm() * b.norm());
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, overlap)));
}

// Closed-form tau-picture states, evaluated from the spectral decomposition of H.
inline StateVector frozen_s_closed_form(const StateVector& psi0, const SpectralDecomposition& h_eig, double T0,
                                        double tau, double epsilon, SFlow flow, const Constants& constants) {
  return apply_exponential(h_eig, s_flow_rate(epsilon, flow, constants) * (tau / T0), psi0);
}

inline StateVector chart_s_closed_form(const StateVector& psi0, const SpectralDecomposition& h_eig, double T0,
                                       double tau, double epsilon, SFlow flow, const Constants& constants) {
  return apply_exponential(h_eig, s_flow_rate(epsilon, flow, constants) * (-std::expm1(-tau) / T0), psi0);
}

inline GeneratorSchedule chart_schedule(const HermitianOperator& h, double T0) {
  return GeneratorSchedule::piecewise(
      [h, T0](double tau) { return h.scaled(std::exp(-tau) / T0, Unit::entropy); });
}

// Integrates in tau and compares at matched points.
//  real_C: tau integrator (chart schedule, eps = 0) against the t picture at
//          t(tau) = hbar / (kB T0 e^tau).
//  frozen_S / chart_S: tau integrator against the closed-form spectral
//          solution of the same reading.
// ray_deviations always report the distance to the t-picture ray.
inline PictureComparison picture_consistency(const StateVector& psi0, const HermitianOperator& h, double T0,
                                             PictureMode mode, const std::vector<double>& tau_grid, double epsilon,
                                             const Constants& constants = {}, const EvolveSOptions& options = {}) {
  constants.validate();
  detail::require(std::isfinite(T0) && T0 > 0.0, "picture_consistency: T0 must be > 0");
  detail::require_dims(h.dim(), psi0.dim(), "picture_consistency");
  if (mode == PictureMode::real_C) {
    detail::require(epsilon == 0.0, "picture_consistency: real_C mode requires eps = 0");
  }

  const SpectralDecomposition h_eig = spectral_decompose(h);
  const ThermalTimeChart chart{T0, Complex(1.0, 0.0), constants};
  const double t0 = chart_tau_to_t(chart, 0.0).real();

  STrajectory traj = [&] {
    switch (mode) {
      case PictureMode::frozen_S:
        return evolve_s(psi0, GeneratorSchedule::constant(h.scaled(1.0 / T0, Unit::entropy)), tau_grid, epsilon,
                        constants, options);
      case PictureMode::real_C:
      case PictureMode::chart_S:
        break;
    }
    return evolve_s(psi0, chart_schedule(h, T0), tau_grid, epsilon, constants, options);
  }();

  PictureComparison out;
  out.taus = tau_grid;
  const double scale = psi0.norm();
  for (std::size_t k = 0; k < tau_grid.size(); ++k) {
    const double tau = tau_grid[k];
    const Complex t = chart_tau_to_t(chart, tau);
    const StateVector h_state = apply_exponential(h_eig, Complex(0.0, -(t.real() - t0) / constants.hbar), psi0);
    const Eigen::VectorXcd& s_state = traj.states[k].amplitudes();

    double dev = 0.0;
    switch (mode) {
      case PictureMode::real_C:
        dev = (s_state - h_state.amplitudes()).norm() / scale;
        break;
      case PictureMode::frozen_S: {
        const StateVector ref = frozen_s_closed_form(psi0, h_eig, T0, tau, epsilon, options.flow, constants);
        dev = (s_state - ref.amplitudes()).norm() / ref.norm();
        break;
      }
      case PictureMode::chart_S: {
        const StateVector ref = chart_s_closed_form(psi0, h_eig, T0, tau, epsilon, options.flow, constants);
        dev = (s_state - ref.amplitudes()).norm() / ref.norm();
        break;
      }
    }
    out.times.push_back(t);
    out.deviations.push_back(dev);
    out.ray_deviations.push_back(ray_distance(s_state, h_state.amplitudes()));
    out.max_deviation = std::max(out.max_deviation, dev);
    out.max_ray_deviation = std::max(out.max_ray_deviation, out.ray_deviations.back());
  }
  return out;
}

// ||frozen_S(tau) - chart_S(tau)|| / ||psi0||: how far the two generator
// readings drift apart. Reported, never asserted zero.
inline double generator_reading_divergence(const StateVector& psi0, const HermitianOperator& h, double T0, double tau,
                                           double epsilon, const Constants& constants = {},
                                           SFlow flow = SFlow::semigroup) {
  constants.validate();
  detail::require_dims(h.dim(), psi0.dim(), "generator_reading_divergence");
  const SpectralDecomposition h_eig = spectral_decompose(h);
  const StateVector a = frozen_s_closed_form(psi0, h_eig, T0, tau, epsilon, flow, constants);
  const StateVector b = chart_s_closed_form(psi0, h_eig, T0, tau, epsilon, flow, constants);
  return (a.amplitudes() - b.amplitudes()).norm() / psi0.norm();
}

}  // namespace entropic
