#pragma once

// Shared helpers for the test binaries: a seeded generator for property
// tests and a few comparisons.

#include <cmath>
#include <complex>
#include <cstdint>

#include "maxsurf/lorentz.hpp"

namespace testing_support {

// SplitMix64; fixed seeds keep every property test reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::complex<double> complex_in_box(double half) {
    const double re = uniform(-half, half);
    return {re, uniform(-half, half)};
  }
  maxsurf::Vec3R vec(double half) {
    const double x = uniform(-half, half);
    const double y = uniform(-half, half);
    return {x, y, uniform(-half, half)};
  }

 private:
  std::uint64_t state_;
};

inline double dist(const maxsurf::Vec3R& a, const maxsurf::Vec3R& b) {
  return maxsurf::euclid_norm(a - b);
}

inline double dist(const maxsurf::Vec3C& a, const maxsurf::Vec3C& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

}  // namespace testing_support
