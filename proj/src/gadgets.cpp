#include "betadepth/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "betadepth/beta_fast.hpp"
#include "betadepth/spherical.hpp"

namespace betadepth {

namespace {

void require_positive(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("gadget needs at least one value");
  for (double v : values) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument("gadget values must be finite and positive, got " +
                                  std::to_string(v));
    }
  }
}

void require_decidable(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("uniqueness decision needs n >= 2 values");
}

constexpr int kMaxSnapSteps = 64;

}  // namespace

Dataset build_spherical_gadget(std::span<const double> values) {
  require_positive(values);
  const std::size_t n = values.size();
  std::vector<PlanarPoint> pts(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = values[i];
    pts[i] = {a, 1.0};
    pts[n + i] = {-1.0, a};
    pts[2 * n + i] = {-a, -1.0};
    pts[3 * n + i] = {1.0, -a};
  }
  return Dataset::from_planar(pts);
}

Dataset build_angle_gadget(std::span<const double> values, double theta) {
  require_positive(values);
  if (!std::isfinite(theta) || !(theta > 0.0) || !(theta < std::numbers::pi)) {
    throw std::invalid_argument("gadget angle must lie in (0, pi)");
  }
  const std::size_t n = values.size();
  std::vector<PlanarPoint> pts(2 * n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = {values[i], 0.0};
    pts[n + i] = {values[i] * c, values[i] * s};
  }
  return Dataset::from_planar(pts);
}

double gadget_angle(double beta) {
  if (!std::isfinite(beta) || !(beta > 1.0)) {
    throw std::invalid_argument("gadget angle needs finite beta > 1");
  }
  return std::acos(1.0 - 1.0 / beta);
}

Dataset build_beta_gadget(std::span<const double> values, double beta) {
  require_positive(values);
  gadget_angle(beta);  // validates beta
  const std::size_t n = values.size();
  // cos(theta) = (beta - 1) / beta, sin(theta) = sqrt(2 beta - 1) / beta.
  const double cos_t = (beta - 1.0) / beta;
  const double sin_t = std::sqrt(2.0 * beta - 1.0) / beta;
  const double origin[2] = {0.0, 0.0};
  std::vector<PlanarPoint> pts(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double b = values[i];
    PlanarPoint rotated{b * cos_t, b * sin_t};
    const double base[2] = {b, 0.0};
    // The pair sits on the region boundary in exact arithmetic. The origin is
    // inside iff beta a.r <= (beta - 1) min(|a|^2, |r|^2) with a = (b, 0), so
    // lengthen a short r, otherwise turn it away from the axis.
    for (int step = 0;; ++step) {
      const double rot[2] = {rotated.x, rotated.y};
      if (in_influence_region(base, rot, beta, origin)) break;
      if (step == kMaxSnapSteps) {
        throw std::runtime_error("could not place gadget point for value " + std::to_string(b));
      }
      if (rotated.x * rotated.x + rotated.y * rotated.y < b * b) {
        rotated.y = std::nextafter(rotated.y, std::numeric_limits<double>::infinity());
      } else {
        rotated.x = std::nextafter(rotated.x, 0.0);
      }
    }
    pts[i] = {b, 0.0};
    pts[n + i] = rotated;
  }
  return Dataset::from_planar(pts);
}

std::vector<double> shift_to_positive(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  if (out.empty()) return out;
  const double lo = *std::min_element(out.begin(), out.end());
  if (lo > 0.0) return out;
  const double shift = lo - 1.0;
  for (double& v : out) v -= shift;
  return out;
}

SphericalDecision decide_uniqueness_spherical(std::span<const double> values) {
  require_decidable(values);
  const std::vector<double> positive = shift_to_positive(values);
  const Dataset s = build_spherical_gadget(positive);
  const std::uint64_t n = positive.size();
  SphericalDecision d;
  d.raw_count = spherical_depth_fast({0.0, 0.0}, s).raw_count;
  d.unique_count = 4 * n * n + 2 * n;
  d.unique = d.raw_count == d.unique_count;
  return d;
}

LensDecision decide_uniqueness_beta(std::span<const double> values, double beta) {
  require_decidable(values);
  const std::vector<double> positive = shift_to_positive(values);
  const Dataset s = build_beta_gadget(positive, beta);
  const std::uint64_t n = positive.size();
  LensDecision d;
  d.raw_count = beta_depth_fast({0.0, 0.0}, s, beta).raw_count;
  d.unique = d.raw_count == n;
  d.duplicate_pairs = d.raw_count > n ? (d.raw_count - n) / 2 : 0;
  return d;
}

LensDecision decide_uniqueness_lens(std::span<const double> values) {
  return decide_uniqueness_beta(values, 2.0);
}

}  // namespace betadepth
