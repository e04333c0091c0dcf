#pragma once

// Weak-field scalar potential h = 4 * sum(trace * dV / r) over a static
// lattice source (geometric units G = c = 1), and its region average
// x = <h> that sets the Wick factor.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "entropic/errors.hpp"
#include "entropic/parallel.hpp"
#include "entropic/rng.hpp"

namespace entropic::gravity {

using Vec3 = Eigen::Vector3d;
using Dims = std::array<long, 3>;

class SourceDistribution {
 public:
  // trace is stored x-fastest: index = i + nx * (j + ny * k). origin is the
  // centre of cell (0, 0, 0).
  SourceDistribution(Dims dims, double spacing, Vec3 origin, std::vector<double> trace)
      : dims_(dims), spacing_(spacing), origin_(std::move(origin)), trace_(std::move(trace)) {
    for (long d : dims_) detail::require(d >= 1, "SourceDistribution: dims must be >= 1");
    detail::require(std::isfinite(spacing_) && spacing_ > 0.0, "SourceDistribution: spacing must be > 0");
    detail::require(origin_.allFinite(), "SourceDistribution: origin must be finite");
    detail::require(trace_.size() == cell_count(), "SourceDistribution: trace size does not match dims");
    for (double v : trace_) {
      detail::require(std::isfinite(v), "SourceDistribution: trace values must be finite");
      detail::require(v >= 0.0, "SourceDistribution: trace values must be >= 0");
    }
    rebuild_support();
  }

  static SourceDistribution empty(Dims dims, double spacing, Vec3 origin) {
    return SourceDistribution(dims, spacing, std::move(origin),
                              std::vector<double>(static_cast<std::size_t>(dims[0] * dims[1] * dims[2]), 0.0));
  }

  const Dims& dims() const { return dims_; }
  double spacing() const { return spacing_; }
  const Vec3& origin() const { return origin_; }
  const std::vector<double>& trace() const { return trace_; }
  double cell_volume() const { return spacing_ * spacing_ * spacing_; }
  std::size_t cell_count() const { return static_cast<std::size_t>(dims_[0] * dims_[1] * dims_[2]); }

  std::size_t index(long i, long j, long k) const {
    return static_cast<std::size_t>(i + dims_[0] * (j + dims_[1] * k));
  }
  Vec3 center(long i, long j, long k) const { return origin_ + spacing_ * Vec3(double(i), double(j), double(k)); }
  double at(long i, long j, long k) const { return trace_[index(i, j, k)]; }

  // Lattice bounding box (outer faces of the boundary cells).
  Vec3 lower() const { return origin_ - Vec3::Constant(0.5 * spacing_); }
  Vec3 upper() const {
    return origin_ + spacing_ * Vec3(dims_[0] - 0.5, dims_[1] - 0.5, dims_[2] - 0.5);
  }

  struct SupportCell {
    Vec3 center;
    double mass;  // trace * cell volume
  };
  const std::vector<SupportCell>& support() const { return support_; }

  double total_mass() const {
    double m = 0.0;
    for (const auto& c : support_) m += c.mass;
    return m;
  }

 private:
  void rebuild_support() {
    support_.clear();
    for (long k = 0; k < dims_[2]; ++k)
      for (long j = 0; j < dims_[1]; ++j)
        for (long i = 0; i < dims_[0]; ++i)
          if (const double v = at(i, j, k); v > 0.0) support_.push_back({center(i, j, k), v * cell_volume()});
  }

  Dims dims_;
  double spacing_;
  Vec3 origin_;
  std::vector<double> trace_;
  std::vector<SupportCell> support_;
};

namespace detail {
using entropic::detail::require;

// Euclidean distance from p to the axis-aligned cube of half-width `half` at c.
inline double distance_to_cube(const Vec3& p, const Vec3& c, double half) {
  const Vec3 gap = ((p - c).cwiseAbs().array() - half).max(0.0).matrix();
  return gap.norm();
}

inline double farthest_cube_distance(const Vec3& p, const Vec3& c, double half) {
  return ((p - c).cwiseAbs().array() + half).matrix().norm();
}

}  // namespace detail

// h at a point outside the support. Points inside or on the surface of a
// nonzero cell are rejected.
inline double trace_potential(const SourceDistribution& source, const Vec3& point) {
  detail::require(point.allFinite(), "trace_potential: point must be finite");
  const double half = 0.5 * source.spacing();
  double h = 0.0;
  for (const auto& cell : source.support()) {
    const Vec3 d = point - cell.center;
    if (d.cwiseAbs().maxCoeff() <= half) {
      throw InvalidArgument("trace_potential: point lies inside or on the source support");
    }
    h += cell.mass / d.norm();
  }
  return 4.0 * h;
}

// ---------------------------------------------------------------------------
// Regions and <h>

struct Box {
  Vec3 lo;
  Vec3 hi;
};
struct Ball {
  Vec3 center;
  double radius;
};
// Sphere surface: every sample sits at exactly `radius` from the centre.
struct Shell {
  Vec3 center;
  double radius;
};

struct RegionSpec {
  std::variant<Box, Ball, Shell> shape;
  long samples = 1000;
};

namespace detail {

inline double distance_cube_to_region(const Vec3& c, double half, const RegionSpec& region) {
  if (const auto* box = std::get_if<Box>(&region.shape)) {
    const Vec3 clo = c.array() - half;
    const Vec3 chi = c.array() + half;
    const Vec3 gap = (clo - box->hi).cwiseMax(box->lo - chi).cwiseMax(Vec3::Zero());
    return gap.norm();
  }
  if (const auto* ball = std::get_if<Ball>(&region.shape)) {
    return std::max(0.0, distance_to_cube(ball->center, c, half) - ball->radius);
  }
  const auto& shell = std::get<Shell>(region.shape);
  const double dmin = distance_to_cube(shell.center, c, half);
  const double dmax = farthest_cube_distance(shell.center, c, half);
  if (shell.radius >= dmin && shell.radius <= dmax) return 0.0;
  return std::min(std::abs(shell.radius - dmin), std::abs(shell.radius - dmax));
}

inline Vec3 unit_direction(std::uint64_t seed, std::uint64_t i) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const auto [a, b] = rng::normal_pair(seed, 0x9a11 + attempt, 2 * i);
    const auto [c, d] = rng::normal_pair(seed, 0x9a11 + attempt, 2 * i + 1);
    (void)d;
    const Vec3 v(a, b, c);
    if (v.norm() > 1e-12) return v.normalized();
  }
}

inline Vec3 region_sample(const RegionSpec& region, std::uint64_t seed, std::uint64_t i) {
  if (const auto* box = std::get_if<Box>(&region.shape)) {
    const Vec3 u(rng::uniform(seed, 0xb0c5, 3 * i), rng::uniform(seed, 0xb0c5, 3 * i + 1),
                 rng::uniform(seed, 0xb0c5, 3 * i + 2));
    return box->lo + u.cwiseProduct(box->hi - box->lo);
  }
  if (const auto* ball = std::get_if<Ball>(&region.shape)) {
    const double r = ball->radius * std::cbrt(rng::uniform(seed, 0xba11, i));
    return ball->center + r * unit_direction(seed, i);
  }
  const auto& shell = std::get<Shell>(region.shape);
  return shell.center + shell.radius * unit_direction(seed, i);
}

}  // namespace detail

inline void validate_region(const SourceDistribution& source, const RegionSpec& region) {
  detail::require(region.samples >= 1, "region: samples must be >= 1");
  if (const auto* box = std::get_if<Box>(&region.shape)) {
    detail::require(box->lo.allFinite() && box->hi.allFinite(), "region: box bounds must be finite");
    detail::require((box->hi.array() > box->lo.array()).all(), "region: box needs lo < hi on every axis");
  } else if (const auto* ball = std::get_if<Ball>(&region.shape)) {
    detail::require(ball->center.allFinite() && std::isfinite(ball->radius) && ball->radius > 0.0,
                    "region: ball needs a finite centre and radius > 0");
  } else {
    const auto& shell = std::get<Shell>(region.shape);
    detail::require(shell.center.allFinite() && std::isfinite(shell.radius) && shell.radius > 0.0,
                    "region: shell needs a finite centre and radius > 0");
  }
  const double half = 0.5 * source.spacing();
  for (const auto& cell : source.support()) {
    if (detail::distance_cube_to_region(cell.center, half, region) < source.spacing()) {
      throw InvalidArgument("region: must stay at least one cell away from the source support");
    }
  }
}

// Monte Carlo average of h over the region. Sample i depends only on
// (seed, i); the sum runs in index order, so the result is bit-identical for
// any worker count.
inline double mean_h(const SourceDistribution& source, const RegionSpec& region, std::uint64_t seed,
                     unsigned workers = 1) {
  validate_region(source, region);
  const auto n = static_cast<std::size_t>(region.samples);
  std::vector<double> values(n);
  parallel_for(n, workers, [&](std::size_t i) {
    values[i] = trace_potential(source, detail::region_sample(region, seed, i));
  });
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  return std::max(0.0, sum / static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Vacuum Laplacian spot check

// 7-point Laplacian, written as sums of differences so a constant field
// gives exactly zero.
inline double discrete_laplacian(const std::function<double(const Vec3&)>& field, const Vec3& point, double step) {
  detail::require(std::isfinite(step) && step > 0.0, "discrete_laplacian: step must be > 0");
  const double f0 = field(point);
  double acc = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 e = Vec3::Zero();
    e(axis) = step;
    acc += (field(point + e) - f0) + (field(point - e) - f0);
  }
  return acc / (step * step);
}

// Laplacian of h at a vacuum point; the stencil must fit inside the lattice
// and keep one cell of clearance from the support.
inline double laplacian_spot_check(const SourceDistribution& source, const Vec3& point, double step) {
  detail::require(point.allFinite(), "laplacian_spot_check: point must be finite");
  detail::require(std::isfinite(step) && step > 0.0, "laplacian_spot_check: step must be > 0");
  const Vec3 lo = source.lower();
  const Vec3 hi = source.upper();
  if (((point.array() - step) < lo.array()).any() || ((point.array() + step) > hi.array()).any()) {
    throw InvalidArgument("laplacian_spot_check: stencil reaches the lattice boundary");
  }
  const double half = 0.5 * source.spacing();
  for (const auto& cell : source.support()) {
    if (detail::distance_to_cube(point, cell.center, half) < step + source.spacing()) {
      throw InvalidArgument("laplacian_spot_check: point is too close to the source support");
    }
  }
  return discrete_laplacian([&](const Vec3& p) { return trace_potential(source, p); }, point, step);
}

inline double laplacian_spot_check(const SourceDistribution& source, const Vec3& point) {
  return laplacian_spot_check(source, point, source.spacing());
}

// ---------------------------------------------------------------------------
// Primitive rasterisation

struct PointMass {
  Vec3 position;
  double mass;
};
struct UniformBall {
  Vec3 center;
  double radius;
  double density;
};
struct UniformBox {
  Vec3 lo;
  Vec3 hi;
  double density;
};
using Primitive = std::variant<PointMass, UniformBall, UniformBox>;

// A point mass lands in its nearest cell; balls and boxes fill every cell
// whose centre they contain.
inline SourceDistribution rasterize(Dims dims, double spacing, const Vec3& origin,
                                    const std::vector<Primitive>& primitives) {
  SourceDistribution grid = SourceDistribution::empty(dims, spacing, origin);
  std::vector<double> trace = grid.trace();
  const double vol = grid.cell_volume();
  for (const auto& prim : primitives) {
    if (const auto* p = std::get_if<PointMass>(&prim)) {
      detail::require(p->position.allFinite() && std::isfinite(p->mass) && p->mass >= 0.0,
                      "point primitive: finite position and mass >= 0 required");
      const Vec3 rel = (p->position - origin) / spacing;
      std::array<long, 3> idx{};
      for (int a = 0; a < 3; ++a) {
        idx[a] = std::lround(rel(a));
        detail::require(idx[a] >= 0 && idx[a] < dims[a], "point primitive lies outside the lattice");
      }
      trace[grid.index(idx[0], idx[1], idx[2])] += p->mass / vol;
      continue;
    }
    for (long k = 0; k < dims[2]; ++k)
      for (long j = 0; j < dims[1]; ++j)
        for (long i = 0; i < dims[0]; ++i) {
          const Vec3 c = grid.center(i, j, k);
          if (const auto* b = std::get_if<UniformBall>(&prim)) {
            detail::require(std::isfinite(b->density) && b->density >= 0.0 && b->radius > 0.0,
                            "ball primitive: radius > 0 and density >= 0 required");
            if ((c - b->center).norm() <= b->radius) trace[grid.index(i, j, k)] += b->density;
          } else {
            const auto& bx = std::get<UniformBox>(prim);
            detail::require(std::isfinite(bx.density) && bx.density >= 0.0, "box primitive: density >= 0 required");
            if ((c.array() >= bx.lo.array()).all() && (c.array() <= bx.hi.array()).all())
              trace[grid.index(i, j, k)] += bx.density;
          }
        }
  }
  return SourceDistribution(dims, spacing, origin, std::move(trace));
}

}  // namespace entropic::gravity
