#pragma once

// Gaussian thermodynamic fluctuations about a reference state (p0, V0, T0, S0).
//
// The independent pair is (dT, dV) with the Landau variances
//   var(dT) = kB T0^2 / cv,   var(dV) = -kB T0 (dV/dp)_T,
// and dS, dp follow linearly from ideal-gas partials.

#include <cmath>
#include <cstdint>
#include <vector>

#include "entropic/errors.hpp"
#include "entropic/opcore.hpp"
#include "entropic/parallel.hpp"
#include "entropic/rng.hpp"

namespace entropic::fluctuations {

class ThermoReference {
 public:
  ThermoReference(double p0, double V0, double T0, double S0, double heat_capacity_cv, double compressibility_term)
      : p0_(p0), v0_(V0), t0_(T0), s0_(S0), cv_(heat_capacity_cv), dvdp_(compressibility_term) {
    for (double v : {p0, V0, T0, S0, heat_capacity_cv, compressibility_term}) {
      detail::require(std::isfinite(v), "ThermoReference: values must be finite");
    }
    detail::require(p0 > 0 && V0 > 0 && T0 > 0 && S0 > 0, "ThermoReference: p0, V0, T0, S0 must be > 0");
    detail::require(heat_capacity_cv > 0, "ThermoReference: heat capacity must be > 0");
    detail::require(compressibility_term < 0, "ThermoReference: (dV/dp)_T must be < 0");
  }

  // p0 = S0 T0 / V0, isothermal (dV/dp)_T = -V0/p0; cv defaults to the monatomic 3/2 S0.
  static ThermoReference ideal_gas(double V0, double T0, double S0, double cv = -1.0) {
    detail::require(V0 > 0 && T0 > 0 && S0 > 0, "ideal_gas: V0, T0, S0 must be > 0");
    const double p0 = S0 * T0 / V0;
    return ThermoReference(p0, V0, T0, S0, cv < 0 ? 1.5 * S0 : cv, -V0 / p0);
  }

  double p0() const { return p0_; }
  double V0() const { return v0_; }
  double T0() const { return t0_; }
  double S0() const { return s0_; }
  double cv() const { return cv_; }
  double compressibility_term() const { return dvdp_; }
  double dp_dT() const { return s0_ / v0_; }
  double dp_dV() const { return -p0_ / v0_; }

  double var_T(const Constants& c) const { return c.kB * t0_ * t0_ / cv_; }
  double var_V(const Constants& c) const { return -c.kB * t0_ * dvdp_; }

 private:
  double p0_, v0_, t0_, s0_, cv_, dvdp_;
};

struct FluctuationSample {
  double dp, dV, dT, dS;
};

// Sample i is a function of (seed, i) only, so the output does not depend on workers.
inline std::vector<FluctuationSample> gaussian_sample(const ThermoReference& ref, std::size_t n, std::uint64_t seed,
                                                      const Constants& c = {}, unsigned workers = 1) {
  c.validate();
  detail::require(n >= 1, "gaussian_sample: n must be >= 1");
  const double sig_t = std::sqrt(ref.var_T(c));
  const double sig_v = std::sqrt(ref.var_V(c));
  std::vector<FluctuationSample> out(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const auto [z1, z2] = rng::normal_pair(seed, 0xf1c7ULL, i);
    const double dT = sig_t * z1;
    const double dV = sig_v * z2;
    out[i] = {ref.dp_dT() * dT + ref.dp_dV() * dV, dV, dT, ref.cv() / ref.T0() * dT + ref.dp_dT() * dV};
  });
  return out;
}

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;

  // |mean - target| <= k standard errors
  bool within(double target, double k = 3.0) const { return std::abs(mean - target) <= k * std_error; }
};

inline Estimate estimate(const std::vector<double>& v) {
  detail::require(v.size() >= 2, "estimate: need at least 2 values");
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / double(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double var = ss / double(v.size() - 1);
  return {mean, std::sqrt(var / double(v.size())), v.size()};
}

struct CovarianceReport {
  Estimate ds_dt_over_kBT;   // <dS dT> / (kB T0), -> 1
  Estimate dp_dV_over_kBT;   // <dp dV> / (kB T0), -> -1
  Estimate dT_dV;            // standardized, -> 0
  Estimate ds_dtau_over_kB;  // <dS dtau> / kB with dtau = dT / T0, -> 1
  Estimate quadratic_form;   // <-dp dV + dT dS> / (kB T0), -> 2
};

inline constexpr std::size_t kMinReportSamples = 1000;

inline CovarianceReport covariance_report(const std::vector<FluctuationSample>& samples, const ThermoReference& ref,
                                          const Constants& c = {}) {
  c.validate();
  detail::require(samples.size() >= kMinReportSamples, "covariance_report: need at least 1000 samples");
  const double kt = c.kB * ref.T0();
  const double sig_t = std::sqrt(ref.var_T(c));
  const double sig_v = std::sqrt(ref.var_V(c));
  const std::size_t n = samples.size();
  std::vector<double> st(n), pv(n), tv(n), stau(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = samples[i];
    st[i] = s.dS * s.dT / kt;
    pv[i] = s.dp * s.dV / kt;
    tv[i] = (s.dT / sig_t) * (s.dV / sig_v);
    stau[i] = s.dS * (s.dT / ref.T0()) / c.kB;
    q[i] = (-s.dp * s.dV + s.dT * s.dS) / kt;
  }
  return {estimate(st), estimate(pv), estimate(tv), estimate(stau), estimate(q)};
}

// (p1, q1, p2, q2) = (-ln p/p0, ln V/V0, ln T/T0, S/S0).
struct CanonicalPoint {
  double p1, q1, p2, q2;
};

struct ThermoState {
  double p, V, T, S;
};

inline CanonicalPoint to_canonical(const ThermoState& s, const ThermoReference& ref) {
  detail::require(s.p > 0 && s.V > 0 && s.T > 0, "to_canonical: p, V, T must be > 0");
  detail::require(std::isfinite(s.S), "to_canonical: S must be finite");
  return {-std::log(s.p / ref.p0()), std::log(s.V / ref.V0()), std::log(s.T / ref.T0()), s.S / ref.S0()};
}

// First-order canonical increments of a fluctuation about the reference state.
inline CanonicalPoint canonical_delta(const FluctuationSample& f, const ThermoReference& ref) {
  return {-f.dp / ref.p0(), f.dV / ref.V0(), f.dT / ref.T0(), f.dS / ref.S0()};
}

// -(S0 / 2kB)(dp1 dq1 + dp2 dq2), unnormalized.
inline double log_probability(const CanonicalPoint& delta, const ThermoReference& ref, const Constants& c = {}) {
  c.validate();
  return -ref.S0() / (2.0 * c.kB) * (delta.p1 * delta.q1 + delta.p2 * delta.q2);
}

// Ideal-gas exponent in physical units at the reference state:
// -(1 / 2kB)(-S0 dp dV / (p0 V0) + dT dS / T0).
inline double log_probability_physical(const FluctuationSample& f, const ThermoReference& ref,
                                       const Constants& c = {}) {
  c.validate();
  return -1.0 / (2.0 * c.kB) * (-ref.S0() * f.dp * f.dV / (ref.p0() * ref.V0()) + f.dT * f.dS / ref.T0());
}

}  // namespace entropic::fluctuations
