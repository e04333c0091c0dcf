#pragma once

// Parametric surfaces D in canonical phase space (p1, q1, p2, q2) over the unit
// square, with Omega = dp1^dq1 + dp2^dq2 and theta = p1 dq1 + p2 dq2.
// Orientation: du^dv on the square, boundary traversed counterclockwise in (u, v).

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "entropic/errors.hpp"
#include "entropic/fluctuations.hpp"
#include "entropic/rng.hpp"

namespace entropic::symplectic {

using fluctuations::CanonicalPoint;

// Rows p1, q1, p2, q2; columns d/du, d/dv.
using Jacobian = Eigen::Matrix<double, 4, 2>;

struct SymplecticPatch {
  std::function<CanonicalPoint(double, double)> map;
  std::function<Jacobian(double, double)> jacobian;
};

// Central differences of `map`; for maps without a closed-form Jacobian.
inline SymplecticPatch with_numeric_jacobian(std::function<CanonicalPoint(double, double)> map, double h = 1e-6) {
  auto jac = [map, h](double u, double v) {
    auto col = [](const CanonicalPoint& a, const CanonicalPoint& b, double d) {
      return Eigen::Vector4d((a.p1 - b.p1) / d, (a.q1 - b.q1) / d, (a.p2 - b.p2) / d, (a.q2 - b.q2) / d);
    };
    Jacobian j;
    j.col(0) = col(map(u + h, v), map(u - h, v), 2 * h);
    j.col(1) = col(map(u, v + h), map(u, v - h), 2 * h);
    return j;
  };
  return {std::move(map), std::move(jac)};
}

// p1 in [p_lo, p_hi] along u, q1 in [q_lo, q_hi] along v; (p2, q2) held fixed.
inline SymplecticPatch rectangle_patch(double p_lo, double p_hi, double q_lo, double q_hi, double p2 = 0.0,
                                       double q2 = 1.0) {
  const double dp = p_hi - p_lo, dq = q_hi - q_lo;
  return {[=](double u, double v) { return CanonicalPoint{p_lo + dp * u, q_lo + dq * v, p2, q2}; },
          [=](double, double) {
            Jacobian j = Jacobian::Zero();
            j(0, 0) = dp;
            j(1, 1) = dq;
            return j;
          }};
}

// Disk of radius r about (p_c, q_c) in the (p1, q1) plane: p = r u cos(2 pi v), q = r u sin(2 pi v).
inline SymplecticPatch disk_patch(double r, double p_c = 0.0, double q_c = 0.0) {
  detail::require(r > 0 && std::isfinite(r), "disk_patch: radius must be > 0");
  constexpr double tau = 2.0 * std::numbers::pi;
  return {[=](double u, double v) {
            return CanonicalPoint{p_c + r * u * std::cos(tau * v), q_c + r * u * std::sin(tau * v), 0.0, 1.0};
          },
          [=](double u, double v) {
            Jacobian j = Jacobian::Zero();
            j(0, 0) = r * std::cos(tau * v);
            j(0, 1) = -tau * r * u * std::sin(tau * v);
            j(1, 0) = r * std::sin(tau * v);
            j(1, 1) = tau * r * u * std::cos(tau * v);
            return j;
          }};
}

// Rectangles of area a in (p1, q1) and b in (p2, q2) swept by the same (u, v).
inline SymplecticPatch two_plane_patch(double a, double b) {
  return {[=](double u, double v) { return CanonicalPoint{a * u, v, b * u, v}; },
          [=](double, double) {
            Jacobian j = Jacobian::Zero();
            j(0, 0) = a;
            j(1, 1) = 1.0;
            j(2, 0) = b;
            j(3, 1) = 1.0;
            return j;
          }};
}

// Affine map plus random quadratic and cubic terms per coordinate.
inline SymplecticPatch random_smooth_patch(std::uint64_t seed, std::uint64_t index, double amplitude = 0.5) {
  rng::NormalStream g(seed, 0x5e7a11ULL + index);
  // c[i][a][b] multiplies u^a v^b for a + b <= 3
  using Coeffs = std::array<std::array<std::array<double, 4>, 4>, 4>;
  Coeffs c{};
  for (auto& coord : c) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) coord[a][b] = (a + b <= 1 ? 1.0 : amplitude) * g.next();
    }
  }
  auto value = [c](int i, double u, double v) {
    double s = 0.0, ua = 1.0;
    for (int a = 0; a <= 3; ++a, ua *= u) {
      double vb = 1.0;
      for (int b = 0; a + b <= 3; ++b, vb *= v) s += c[i][a][b] * ua * vb;
    }
    return s;
  };
  auto grad = [c](int i, double u, double v) {
    const double up[4] = {1.0, u, u * u, u * u * u};
    const double vp[4] = {1.0, v, v * v, v * v * v};
    double du = 0.0, dv = 0.0;
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) {
        if (a > 0) du += c[i][a][b] * a * up[a - 1] * vp[b];
        if (b > 0) dv += c[i][a][b] * b * up[a] * vp[b - 1];
      }
    }
    return Eigen::Vector2d(du, dv);
  };
  return {[value](double u, double v) {
            return CanonicalPoint{value(0, u, v), value(1, u, v), value(2, u, v), value(3, u, v)};
          },
          [grad](double u, double v) {
            Jacobian j;
            for (int i = 0; i < 4; ++i) j.row(i) = grad(i, u, v).transpose();
            return j;
          }};
}

// Pulled-back density of Omega at (u, v).
inline double omega_density(const Jacobian& j) {
  return j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0) + j(2, 0) * j(3, 1) - j(2, 1) * j(3, 0);
}

// Midpoint rule on a resolution x resolution grid.
inline double symplectic_area(const SymplecticPatch& patch, int resolution) {
  detail::require(resolution >= 1, "symplectic_area: resolution must be >= 1");
  const double h = 1.0 / resolution;
  double total = 0.0, largest = 0.0;  // largest Gram determinant seen
  for (int i = 0; i < resolution; ++i) {
    double row = 0.0;
    for (int k = 0; k < resolution; ++k) {
      const Jacobian j = patch.jacobian((i + 0.5) * h, (k + 0.5) * h);
      const double w = omega_density(j);
      if (!std::isfinite(w)) throw NumericalError("symplectic_area: non-finite Jacobian");
      largest = std::max(largest, (j.transpose() * j).determinant());
      row += w;
    }
    total += row;
  }
  detail::require(largest > 0.0, "symplectic_area: degenerate parametrization (zero Jacobian everywhere)");
  return total * h * h;
}

// Image of the square's boundary, counterclockwise from (0, 0); 4 * resolution + 1
// points with the last equal to the first.
inline std::vector<CanonicalPoint> boundary_samples(const SymplecticPatch& patch, int resolution) {
  detail::require(resolution >= 1, "boundary_samples: resolution must be >= 1");
  std::vector<CanonicalPoint> pts;
  pts.reserve(4 * static_cast<std::size_t>(resolution) + 1);
  const double h = 1.0 / resolution;
  for (int k = 0; k < resolution; ++k) pts.push_back(patch.map(k * h, 0.0));
  for (int k = 0; k < resolution; ++k) pts.push_back(patch.map(1.0, k * h));
  for (int k = 0; k < resolution; ++k) pts.push_back(patch.map(1.0 - k * h, 1.0));
  for (int k = 0; k < resolution; ++k) pts.push_back(patch.map(0.0, 1.0 - k * h));
  pts.push_back(pts.front());
  return pts;
}

inline constexpr double kClosureTolerance = 1e-9;

// Trapezoid rule for the line integral of theta along a closed polyline.
inline double boundary_action(const std::vector<CanonicalPoint>& path) {
  detail::require(path.size() >= 2, "boundary_action: need at least 2 points");
  const auto& a = path.front();
  const auto& b = path.back();
  const double gap = std::max({std::abs(a.p1 - b.p1), std::abs(a.q1 - b.q1), std::abs(a.p2 - b.p2), std::abs(a.q2 - b.q2)});
  detail::require(gap <= kClosureTolerance, "boundary_action: boundary is not closed");
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const auto& x = path[k];
    const auto& y = path[k + 1];
    s += 0.5 * (x.p1 + y.p1) * (y.q1 - x.q1) + 0.5 * (x.p2 + y.p2) * (y.q2 - x.q2);
  }
  if (!std::isfinite(s)) throw NumericalError("boundary_action: non-finite result");
  return s;
}

inline double boundary_action(const SymplecticPatch& patch, int resolution) {
  return boundary_action(boundary_samples(patch, resolution));
}

struct StokesStudy {
  std::vector<int> resolutions;
  std::vector<double> errors;  // |area - boundary_action|
  std::vector<double> orders;  // log2(e_k / e_{k+1})

  double min_order() const {
    double m = std::numeric_limits<double>::infinity();
    for (double o : orders) m = std::min(m, o);
    return m;
  }
};

// Errors at base, 2 base, ..., 2^levels base.
inline StokesStudy stokes_convergence(const SymplecticPatch& patch, int base_resolution, int levels = 3) {
  detail::require(base_resolution >= 1 && levels >= 1, "stokes_convergence: bad resolution ladder");
  StokesStudy st;
  for (int k = 0, res = base_resolution; k <= levels; ++k, res *= 2) {
    st.resolutions.push_back(res);
    st.errors.push_back(std::abs(symplectic_area(patch, res) - boundary_action(patch, res)));
  }
  for (std::size_t k = 0; k + 1 < st.errors.size(); ++k) st.orders.push_back(std::log2(st.errors[k] / st.errors[k + 1]));
  return st;
}

}  // namespace entropic::symplectic
