#include "betadepth/range_counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace betadepth {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Lower/upper float bounds of the exact coordinate hi + lo.
double lower(double hi, double lo) {
  return lo < 0.0 ? std::nextafter(hi, -std::numeric_limits<double>::infinity()) : hi;
}
double upper(double hi, double lo) {
  return lo > 0.0 ? std::nextafter(hi, std::numeric_limits<double>::infinity()) : hi;
}

void require_normal(const HalfplaneQuery& h) {
  if (h.normal.x == 0.0 && h.normal.y == 0.0) {
    throw std::invalid_argument("halfplane query needs a nonzero normal");
  }
}

void require_radius(const DiskQuery& d) {
  if (!(d.radius_sq > 0.0) || !std::isfinite(d.radius_sq)) {
    throw std::invalid_argument("disk query needs a positive finite squared radius");
  }
}

}  // namespace

Coverage HalfplaneQuery::classify(const Box& box) const {
  return classify_halfplane(*this, box, 4.0 * kEps);
}

Coverage classify_halfplane(const HalfplaneQuery& h, const Box& box, double rel_slack) {
  const PlanarPoint& normal = h.normal;
  const double offset = h.offset;
  const double xs[2] = {box.min_x, box.max_x};
  const double ys[2] = {box.min_y, box.max_y};
  bool all_in = true;
  bool all_out = true;
  for (double x : xs) {
    for (double y : ys) {
      const double px = normal.x * x;
      const double py = normal.y * y;
      const double f = px + py - offset;
      const double err = rel_slack * (std::fabs(px) + std::fabs(py) + std::fabs(offset)) + kTiny;
      all_in = all_in && f < -err;
      all_out = all_out && f > err;
    }
  }
  if (all_in) return Coverage::all;
  if (all_out) return Coverage::none;
  return Coverage::partial;
}

bool HalfplaneQuery::contains(const Displacement& b) const {
  return robust_sign([&]<class T>(T*) {
           const T px = lift<T>(normal.x) * lift_x<T>(b);
           const T py = lift<T>(normal.y) * lift_y<T>(b);
           const T f = px + py - lift<T>(offset);
           return f;
         }) <= 0;
}

Coverage DiskQuery::classify(const Box& box) const {
  return classify_open_disk(*this, box, 4.0 * kEps);
}

Coverage classify_open_disk(const DiskQuery& d, const Box& box, double rel_slack) {
  const PlanarPoint& center = d.center;
  const double radius_sq = d.radius_sq;
  const double near_x = std::max({box.min_x - center.x, 0.0, center.x - box.max_x});
  const double near_y = std::max({box.min_y - center.y, 0.0, center.y - box.max_y});
  const double far_x = std::max(std::fabs(center.x - box.min_x), std::fabs(center.x - box.max_x));
  const double far_y = std::max(std::fabs(center.y - box.min_y), std::fabs(center.y - box.max_y));
  const double near_sq = near_x * near_x + near_y * near_y;
  const double far_sq = far_x * far_x + far_y * far_y;
  const double err =
      rel_slack * (far_sq + radius_sq + center.x * center.x + center.y * center.y) + kTiny;
  if (far_sq < radius_sq - err) return Coverage::all;
  if (near_sq > radius_sq + err) return Coverage::none;
  return Coverage::partial;
}

bool DiskQuery::contains(const Displacement& b) const {
  return robust_sign([&]<class T>(T*) {
           const T dx = lift_x<T>(b) - lift<T>(center.x);
           const T dy = lift_y<T>(b) - lift<T>(center.y);
           const T f = dx * dx + dy * dy - lift<T>(radius_sq);
           return f;
         }) < 0;
}

Coverage HalfplaneMinusOpenDisk::classify(const Box& box) const {
  const Coverage h = halfplane.classify(box);
  if (h == Coverage::none) return Coverage::none;
  const Coverage d = disk.classify(box);
  if (d == Coverage::all) return Coverage::none;
  if (h == Coverage::all && d == Coverage::none) return Coverage::all;
  return Coverage::partial;
}

CountingIndex::CountingIndex(std::vector<Displacement> points, std::size_t leaf_size)
    : points_(std::move(points)), leaf_size_(std::max<std::size_t>(leaf_size, 1)) {
  if (points_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("counting index supports fewer than 2^32 points");
  }
  if (points_.empty()) return;
  nodes_.reserve(2 * (points_.size() / leaf_size_ + 1));
  nodes_.emplace_back();
  build(0, 0, static_cast<std::uint32_t>(points_.size()));
}

void CountingIndex::build(std::uint32_t id, std::uint32_t begin, std::uint32_t end) {
  Box box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::uint32_t k = begin; k < end; ++k) {
    const Displacement& p = points_[k];
    box.min_x = std::min(box.min_x, lower(p.x, p.ex));
    box.max_x = std::max(box.max_x, upper(p.x, p.ex));
    box.min_y = std::min(box.min_y, lower(p.y, p.ey));
    box.max_y = std::max(box.max_y, upper(p.y, p.ey));
  }
  nodes_[id].box = box;
  nodes_[id].begin = begin;
  nodes_[id].end = end;
  if (end - begin <= leaf_size_) return;

  const bool split_x = (box.max_x - box.min_x) >= (box.max_y - box.min_y);
  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(points_.begin() + begin, points_.begin() + mid, points_.begin() + end,
                   [split_x](const Displacement& a, const Displacement& b) {
                     return split_x ? a.x < b.x : a.y < b.y;
                   });
  const auto left = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  nodes_.emplace_back();
  nodes_[id].left = left;
  build(left, begin, mid);
  build(left + 1, mid, end);
}

CountingIndex build_counting_index(std::span<const PlanarPoint> points, std::size_t leaf_size) {
  std::vector<Displacement> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("counting index points must be finite");
    }
    pts.push_back(displacement(p));
  }
  return CountingIndex(std::move(pts), leaf_size);
}

std::size_t count_halfplane(const CountingIndex& index, const HalfplaneQuery& h) {
  require_normal(h);
  return index.count(h);
}

std::size_t count_halfplane_minus_open_disk(const CountingIndex& index, const HalfplaneQuery& h,
                                            const DiskQuery& d) {
  require_normal(h);
  require_radius(d);
  return index.count(HalfplaneMinusOpenDisk{h, d});
}

std::size_t count_halfplane_linear(std::span<const PlanarPoint> points, const HalfplaneQuery& h) {
  require_normal(h);
  return static_cast<std::size_t>(std::ranges::count_if(
      points, [&](const PlanarPoint& p) { return h.contains(displacement(p)); }));
}

std::size_t count_halfplane_minus_open_disk_linear(std::span<const PlanarPoint> points,
                                                   const HalfplaneQuery& h, const DiskQuery& d) {
  require_normal(h);
  require_radius(d);
  const HalfplaneMinusOpenDisk region{h, d};
  return static_cast<std::size_t>(std::ranges::count_if(
      points, [&](const PlanarPoint& p) { return region.contains(displacement(p)); }));
}

}  // namespace betadepth
