#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "betadepth/geometry.hpp"

namespace betadepth {

/// Uniform planar points from std::mt19937_64, whose output sequence is fixed
/// by the standard. Doubles are built from the top 53 bits rather than through
/// std::uniform_real_distribution, whose algorithm is implementation-defined,
/// so a seed gives the same points on every platform.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  PlanarPoint in_square(double half_width) {
    const double x = uniform(-half_width, half_width);
    const double y = uniform(-half_width, half_width);
    return {x, y};
  }

  std::vector<PlanarPoint> in_square(std::size_t n, double half_width) {
    std::vector<PlanarPoint> pts(n);
    for (auto& p : pts) p = in_square(half_width);
    return pts;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace betadepth
