#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "betadepth/exact.hpp"

namespace betadepth {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

/// Point in R^d.
using PointD = std::vector<double>;

/// Exact difference of two planar points stored as an unevaluated sum:
/// the true vector is (x + ex, y + ey). `x`, `y` are the rounded difference.
struct Displacement {
  double x = 0.0;
  double y = 0.0;
  double ex = 0.0;
  double ey = 0.0;

  bool is_zero() const { return x == 0.0 && y == 0.0; }
  PlanarPoint rounded() const { return {x, y}; }
};

/// p - origin without rounding loss.
Displacement displacement(const PlanarPoint& p, const PlanarPoint& origin);
/// Displacement of an exactly representable vector.
inline Displacement displacement(const PlanarPoint& v) { return {v.x, v.y, 0.0, 0.0}; }

template <class T>
T lift_x(const Displacement& d) {
  return lift_sum<T>(d.x, d.ex);
}
template <class T>
T lift_y(const Displacement& d) {
  return lift_sum<T>(d.y, d.ey);
}

/// Exact signs of dot and cross products of two displacements.
int dot_sign(const Displacement& u, const Displacement& v);
int cross_sign(const Displacement& u, const Displacement& v);

/// Exact orientation of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c);

/// Lune-based influence region of a pair for beta >= 1. The rounded centers
/// and radius are for inspection; membership is decided from the defining
/// points and beta.
struct InfluenceRegion {
  PointD xi;
  PointD xj;
  double beta = 1.0;
  PointD ci;
  PointD cj;
  double r = 0.0;

  std::size_t dim() const { return xi.size(); }
};

InfluenceRegion influence_region(const PointD& xi, const PointD& xj, double beta);

/// Closed membership: beta*|xi - xj|/2 >= max(|q - ci|, |q - cj|).
bool contains(const InfluenceRegion& region, std::span<const double> q);

/// Same test without materializing a region. All spans share one dimension.
bool in_influence_region(std::span<const double> xi, std::span<const double> xj, double beta,
                         std::span<const double> q);

enum class AngleClass { acute, right, obtuse_or_straight };

/// Classifies the angle uOv by the sign of u.v.
AngleClass classify_angle_at_origin(const PlanarPoint& u, const PlanarPoint& v);

/// Throws std::invalid_argument unless beta is finite and >= 1.
void require_beta(double beta);

}  // namespace betadepth
