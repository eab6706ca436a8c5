#include "betadepth/spherical.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <ranges>
#include <stdexcept>
#include <string>

namespace betadepth {

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2*pi). The rounded components carry the
// exact sign of the true ones.
int half_plane(const Displacement& v) { return (v.y > 0.0 || (v.y == 0.0 && v.x > 0.0)) ? 0 : 1; }

bool same_direction(const Displacement& u, const Displacement& v) {
  return half_plane(u) == half_plane(v) && cross_sign(u, v) == 0;
}

// Position of w's angle relative to u, phi = theta(w) - theta(u) mod 2*pi:
// 0: [0, pi/2)  1: [pi/2, pi]  2: (pi, 3*pi/2]  3: (3*pi/2, 2*pi)
int quadrant(const Displacement& u, const Displacement& w) {
  const int c = cross_sign(u, w);
  const int d = dot_sign(u, w);
  if (c >= 0) return d > 0 ? 0 : 1;
  return d <= 0 ? 2 : 3;
}

}  // namespace

double AngularEntry::theta() const {
  const double t = std::atan2(vector.y, vector.x);
  return t < 0.0 ? t + 2.0 * std::numbers::pi : t;
}

bool angle_less(const Displacement& u, const Displacement& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return cross_sign(u, v) > 0;
}

SortedAngularIndex build_index(const PlanarPoint& q, const Dataset& s) {
  require_planar(s);
  require_finite(q);
  if (s.size() < 2) throw std::invalid_argument("spherical depth needs at least 2 data points");

  SortedAngularIndex index;
  index.entries_.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Displacement d = displacement(s.planar(i), q);
    if (d.is_zero()) {
      ++index.zero_count_;
    } else {
      index.entries_.push_back({d, i});
    }
  }
  std::sort(index.entries_.begin(), index.entries_.end(),
            [](const AngularEntry& a, const AngularEntry& b) {
              if (angle_less(a.vector, b.vector)) return true;
              if (angle_less(b.vector, a.vector)) return false;
              return a.original_index < b.original_index;
            });

  const auto& e = index.entries_;
  index.run_start_.resize(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    index.run_start_[k] =
        (k > 0 && same_direction(e[k - 1].vector, e[k].vector)) ? index.run_start_[k - 1] : k;
  }
  return index;
}

std::size_t opposition_count(const SortedAngularIndex& index, std::size_t i) {
  const auto& e = index.entries_;
  if (i >= e.size()) {
    throw std::out_of_range("entry position " + std::to_string(i) + " out of range " +
                            std::to_string(e.size()));
  }
  const std::size_t m = e.size();
  const std::size_t start = index.run_start_[i];
  const Displacement& u = e[i].vector;
  // Starting at u's run, the quadrant is nondecreasing around the circle.
  const auto key = [&](std::size_t p) { return quadrant(u, e[(start + p) % m].vector); };
  const auto positions = std::views::iota(std::size_t{0}, m);
  const auto first_opposed =
      std::ranges::partition_point(positions, [&](std::size_t p) { return key(p) < 1; });
  const auto past_opposed =
      std::ranges::partition_point(positions, [&](std::size_t p) { return key(p) <= 2; });
  return static_cast<std::size_t>(past_opposed - first_opposed);
}

DepthResult spherical_depth_fast(const PlanarPoint& q, const Dataset& s) {
  const SortedAngularIndex index = build_index(q, s);
  std::uint64_t twice = 0;
  for (std::size_t i = 0; i < index.entries().size(); ++i) twice += opposition_count(index, i);
  assert(twice % 2 == 0);
  const std::uint64_t raw = twice / 2 + coincident_pairs(index.zero_count(), s.size());
  return pair_result(raw, s.size(), Method::spherical_fast, 1.0);
}

}  // namespace betadepth
