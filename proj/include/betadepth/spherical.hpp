#pragma once

// Planar spherical depth (beta = 1) in O(n log n): translate the data by -q,
// sort by polar angle, and for every point count the points whose direction
// makes an angle of at least pi/2 with it.

#include <cstddef>
#include <vector>

#include "betadepth/dataset.hpp"

namespace betadepth {

struct AngularEntry {
  Displacement vector;
  std::size_t original_index = 0;

  /// Polar angle in [0, 2*pi). Display only; ordering never uses it.
  double theta() const;
};

/// Nonzero translated points in counterclockwise order starting from the
/// positive x-axis, ties broken by original index. Points equal to q are held
/// out and only counted.
class SortedAngularIndex {
 public:
  const std::vector<AngularEntry>& entries() const { return entries_; }
  std::size_t zero_count() const { return zero_count_; }
  std::size_t size() const { return entries_.size() + zero_count_; }

 private:
  friend SortedAngularIndex build_index(const PlanarPoint& q, const Dataset& s);
  friend std::size_t opposition_count(const SortedAngularIndex& index, std::size_t i);

  std::vector<AngularEntry> entries_;
  // First position of the run of entries sharing entries_[i]'s direction.
  std::vector<std::size_t> run_start_;
  std::size_t zero_count_ = 0;
};

/// Strict counterclockwise order of nonzero vectors by angle in [0, 2*pi).
bool angle_less(const Displacement& u, const Displacement& v);

SortedAngularIndex build_index(const PlanarPoint& q, const Dataset& s);

/// Number of entries w with u.w <= 0, where u is the entry at position i;
/// equivalently those in the closed arc [theta_i + pi/2, theta_i + 3*pi/2].
/// Two binary searches. Throws std::out_of_range for a bad position.
std::size_t opposition_count(const SortedAngularIndex& index, std::size_t i);

/// Raw count = (sum of opposition counts) / 2 + pairs with a point equal to q.
DepthResult spherical_depth_fast(const PlanarPoint& q, const Dataset& s);

}  // namespace betadepth
