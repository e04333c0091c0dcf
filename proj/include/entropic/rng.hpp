#pragma once

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, index), so sample i never depends on how many workers
// produced samples 0..i-1.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace entropic::rng {

// SplitMix64 finalizer (Steele, Lea & Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t index) noexcept {
  return mix64(mix64(mix64(seed) ^ stream) ^ index);
}

// Uniform in (0, 1]; never returns 0 so log() is always finite.
constexpr double to_unit_open_closed(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t index) noexcept {
  return to_unit_open_closed(counter_hash(seed, stream, index));
}

// Two independent standard normals via Box-Muller on draws 2k and 2k+1.
inline std::pair<double, double> normal_pair(std::uint64_t seed,
                                             std::uint64_t stream,
                                             std::uint64_t k) noexcept {
  const double u1 = uniform(seed, stream, 2 * k);
  const double u2 = uniform(seed, stream, 2 * k + 1);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Sequential convenience wrapper for code that just wants "the next normal"
// from a deterministic stream.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  double next() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    auto [a, b] = normal_pair(seed_, stream_, counter_++);
    spare_ = b;
    has_spare_ = true;
    return a;
  }

  double next_uniform() noexcept { return uniform(seed_, stream_ ^ 0x5bd1e995ULL, ucounter_++); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t ucounter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace entropic::rng
