#include "betadepth/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace betadepth {

namespace {

// Knuth's TwoSum applied to a + (-b); exact for finite inputs without overflow.
void two_diff(double a, double b, double& s, double& err) {
  s = a - b;
  const double bb = s - a;
  err = (a - (s - bb)) + (-b - bb);
}

// |q - c|^2 - r^2 for c = ci (first) or c = cj (!first).
template <class T>
T center_power(std::span<const double> xi, std::span<const double> xj, double beta,
               std::span<const double> q, bool first) {
  const T half = lift<T>(beta) * lift<T>(0.5);
  const T comp = lift<T>(1.0) - half;
  const T& wi = first ? half : comp;
  const T& wj = first ? comp : half;
  T dist(0.0);
  T span_sq(0.0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const T xik = lift<T>(xi[k]);
    const T xjk = lift<T>(xj[k]);
    const T c = wi * xik + wj * xjk;
    const T diff = lift<T>(q[k]) - c;
    dist = dist + diff * diff;
    const T d = xik - xjk;
    span_sq = span_sq + d * d;
  }
  const T r_sq = half * half * span_sq;
  return dist - r_sq;
}

template <class T>
T dot_of(const Displacement& u, const Displacement& v) {
  const T p = lift_x<T>(u) * lift_x<T>(v);
  const T s = lift_y<T>(u) * lift_y<T>(v);
  return p + s;
}

template <class T>
T cross_of(const Displacement& u, const Displacement& v) {
  const T p = lift_x<T>(u) * lift_y<T>(v);
  const T s = lift_y<T>(u) * lift_x<T>(v);
  return p - s;
}

template <class T>
T orient_of(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
  const T abx = lift<T>(b.x) - lift<T>(a.x);
  const T aby = lift<T>(b.y) - lift<T>(a.y);
  const T acx = lift<T>(c.x) - lift<T>(a.x);
  const T acy = lift<T>(c.y) - lift<T>(a.y);
  const T l = abx * acy;
  const T r = aby * acx;
  return l - r;
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

}  // namespace

Displacement displacement(const PlanarPoint& p, const PlanarPoint& origin) {
  Displacement d;
  two_diff(p.x, origin.x, d.x, d.ex);
  two_diff(p.y, origin.y, d.y, d.ey);
  return d;
}

int dot_sign(const Displacement& u, const Displacement& v) {
  return robust_sign([&]<class T>(T*) { return dot_of<T>(u, v); });
}

int cross_sign(const Displacement& u, const Displacement& v) {
  return robust_sign([&]<class T>(T*) { return cross_of<T>(u, v); });
}

int orientation(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
  return robust_sign([&]<class T>(T*) { return orient_of<T>(a, b, c); });
}

void require_beta(double beta) {
  if (!std::isfinite(beta) || beta < 1.0) {
    throw std::invalid_argument("beta must be finite and >= 1, got " + std::to_string(beta));
  }
}

InfluenceRegion influence_region(const PointD& xi, const PointD& xj, double beta) {
  require_same_dim(xi.size(), xj.size());
  require_beta(beta);
  InfluenceRegion region;
  region.xi = xi;
  region.xj = xj;
  region.beta = beta;
  region.ci.resize(xi.size());
  region.cj.resize(xi.size());
  const double half = beta / 2.0;
  double span_sq = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    region.ci[k] = half * xi[k] + (1.0 - half) * xj[k];
    region.cj[k] = (1.0 - half) * xi[k] + half * xj[k];
    span_sq += (xi[k] - xj[k]) * (xi[k] - xj[k]);
  }
  region.r = half * std::sqrt(span_sq);
  return region;
}

bool in_influence_region(std::span<const double> xi, std::span<const double> xj, double beta,
                         std::span<const double> q) {
  const auto power = [&](bool first) {
    return robust_sign([&]<class T>(T*) { return center_power<T>(xi, xj, beta, q, first); });
  };
  return power(true) <= 0 && power(false) <= 0;
}

bool contains(const InfluenceRegion& region, std::span<const double> q) {
  require_same_dim(region.dim(), q.size());
  return in_influence_region(region.xi, region.xj, region.beta, q);
}

AngleClass classify_angle_at_origin(const PlanarPoint& u, const PlanarPoint& v) {
  if ((u.x == 0.0 && u.y == 0.0) || (v.x == 0.0 && v.y == 0.0)) {
    throw std::invalid_argument("angle at origin is undefined for a zero vector");
  }
  const int s = dot_sign(displacement(u), displacement(v));
  if (s > 0) return AngleClass::acute;
  if (s == 0) return AngleClass::right;
  return AngleClass::obtuse_or_straight;
}

}  // namespace betadepth
