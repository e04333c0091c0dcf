#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/errors.hpp"

namespace entropic {

// steps + 1 equally spaced points on [0, end].
inline std::vector<double> uniform_grid(double end, int steps) {
  detail::require(steps >= 1, "uniform_grid: steps must be >= 1");
  detail::require(std::isfinite(end), "uniform_grid: end must be finite");
  std::vector<double> g(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) g[static_cast<std::size_t>(k)] = end * k / steps;
  return g;
}

namespace detail {

// Non-empty, starts at exactly 0, strictly ascending, finite.
inline void require_grid_from_zero(const std::vector<double>& grid, std::string_view what) {
  const std::string w(what);
  require(!grid.empty(), w + ": grid is empty");
  require(grid.front() == 0.0, w + ": grid must start at 0");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(std::isfinite(grid[i]), w + ": grid values must be finite");
    if (i > 0) require(grid[i] > grid[i - 1], w + ": grid must be strictly ascending");
  }
}

}  // namespace detail
}  // namespace entropic
