#include "betadepth/beta_fast.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace betadepth {

namespace {

// Pruning uses rounded query parameters; widen the certified margin well past
// their rounding error so no box is misclassified.
constexpr double kPruneSlack = 1e-9;
constexpr double kFilterSlack = 64.0 * std::numeric_limits<double>::epsilon();

template <class T>
T half_k_inverse(double beta) {
  // 1 / (2k) = (beta - 1) / beta
  const T b = lift<T>(beta);
  const T num = b - lift<T>(1.0);
  return num / b;
}

template <class T>
T halfplane_value(const Displacement& a, const Displacement& b, double beta) {
  const T ax = lift_x<T>(a);
  const T ay = lift_y<T>(a);
  const T dot = ax * lift_x<T>(b) + ay * lift_y<T>(b);
  const T norm_sq = ax * ax + ay * ay;
  const T bound = norm_sq * half_k_inverse<T>(beta);
  return dot - bound;
}

template <class T>
T disk_value(const Displacement& a, const Displacement& b, double beta) {
  const T bt = lift<T>(beta);
  const T two(2.0);
  const T k = bt / (two * (bt - lift<T>(1.0)));
  const T ax = lift_x<T>(a);
  const T ay = lift_y<T>(a);
  const T dx = lift_x<T>(b) - k * ax;
  const T dy = lift_y<T>(b) - k * ay;
  const T radius_sq = k * k * (ax * ax + ay * ay);
  return dx * dx + dy * dy - radius_sq;
}

bool lemma_predicate(const Displacement& a, const Displacement& b, double beta) {
  const int h = robust_sign([&]<class T>(T*) { return halfplane_value<T>(a, b, beta); });
  if (h > 0) return false;
  return robust_sign([&]<class T>(T*) { return disk_value<T>(a, b, beta); }) >= 0;
}

void require_lemma_inputs(bool a_zero, bool b_zero, double beta) {
  if (a_zero || b_zero) throw std::invalid_argument("lemma test needs nonzero vectors");
  if (!std::isfinite(beta) || !(beta > 1.0)) {
    throw std::invalid_argument("lemma test needs finite beta > 1");
  }
}

}  // namespace

HalfplaneQuery LemmaTwoGeometry::halfplane() const {
  return {a, (a.x * a.x + a.y * a.y) / (2.0 * k)};
}

DiskQuery LemmaTwoGeometry::disk() const { return {c, r_sq}; }

LemmaTwoGeometry lemma_two_geometry(const PlanarPoint& a, double beta) {
  if (a.x == 0.0 && a.y == 0.0) throw std::invalid_argument("lemma geometry needs a nonzero vector");
  if (!std::isfinite(beta) || !(beta > 1.0)) {
    throw std::invalid_argument("lemma geometry needs finite beta > 1");
  }
  LemmaTwoGeometry g;
  g.a = a;
  g.beta = beta;
  g.k = beta / (2.0 * (beta - 1.0));
  const double shrink = (beta - 1.0) / beta;
  g.p = {shrink * a.x, shrink * a.y};
  g.c = {g.k * a.x, g.k * a.y};
  g.r_sq = g.k * g.k * (a.x * a.x + a.y * a.y);
  return g;
}

bool origin_in_region_via_lemma(const PlanarPoint& a, const PlanarPoint& b, double beta) {
  return origin_in_region_via_lemma(displacement(a), displacement(b), beta);
}

bool origin_in_region_via_lemma(const Displacement& a, const Displacement& b, double beta) {
  require_lemma_inputs(a.is_zero(), b.is_zero(), beta);
  return lemma_predicate(a, b, beta);
}

LemmaTwoRegion::LemmaTwoRegion(const Displacement& a, double beta)
    : a_(a),
      beta_(beta),
      shrink_((beta - 1.0) / beta),
      norm_sq_(a.x * a.x + a.y * a.y),
      l1_(std::fabs(a.x) + std::fabs(a.y)) {
  if (beta == 1.0) {
    halfplane_ = {a.rounded(), 0.0};
  } else {
    const LemmaTwoGeometry g = lemma_two_geometry(a.rounded(), beta);
    halfplane_ = g.halfplane();
    disk_ = g.disk();
  }
}

Coverage LemmaTwoRegion::classify(const Box& box) const {
  const Coverage h = classify_halfplane(halfplane_, box, kPruneSlack);
  if (beta_ == 1.0 || h == Coverage::none) return h;
  const Coverage d = classify_open_disk(disk_, box, kPruneSlack);
  if (d == Coverage::all) return Coverage::none;
  if (h == Coverage::all && d == Coverage::none) return Coverage::all;
  return Coverage::partial;
}

bool LemmaTwoRegion::contains(const Displacement& b) const {
  // The two lemma conditions reduce to a.b <= shrink * min(|a|^2, |b|^2). Decide
  // in doubles when the margin clears a generous error bound, else go exact.
  const double dot = a_.x * b.x + a_.y * b.y;
  const double l1 = l1_ + std::fabs(b.x) + std::fabs(b.y);
  const double err = kFilterSlack * l1 * l1;
  const double f_a = dot - shrink_ * norm_sq_;
  const double f_b = dot - shrink_ * (b.x * b.x + b.y * b.y);
  if (f_a > err || f_b > err) return false;
  if (f_a < -err && f_b < -err) return true;
  if (beta_ == 1.0) return dot_sign(a_, b) <= 0;
  return lemma_predicate(a_, b, beta_);
}

DepthResult beta_depth_fast(const PlanarPoint& q, const Dataset& s, double beta,
                            std::size_t leaf_size) {
  require_beta(beta);
  require_planar(s);
  require_finite(q);
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("beta-skeleton depth needs at least 2 data points");

  std::vector<Displacement> translated;
  translated.reserve(n);
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Displacement d = displacement(s.planar(i), q);
    if (d.is_zero()) {
      ++zeros;
    } else {
      translated.push_back(d);
    }
  }

  const CountingIndex index(std::move(translated), leaf_size);
  std::uint64_t twice = 0;
  // Tree order keeps consecutive queries similar, so they walk the same nodes.
  for (const Displacement& a : index.points()) {
    const LemmaTwoRegion region(a, beta);
    // a never satisfies its own query: a.a <= |a|^2 (beta - 1) / beta fails for beta >= 1.
    assert(!region.contains(a));
    twice += index.count(region);
  }
  assert(twice % 2 == 0);
  const std::uint64_t raw = twice / 2 + coincident_pairs(zeros, n);
  return pair_result(raw, n, Method::beta_fast, beta);
}

}  // namespace betadepth
