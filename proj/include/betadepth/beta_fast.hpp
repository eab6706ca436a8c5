#pragma once

// Planar beta-skeleton depth by per-point range counting.
//
// With the data translated so that q is the origin, the origin lies in
// S_beta(a, b) exactly when b is in the closed halfplane
//   a . b <= |a|^2 / (2k),          k = beta / (2 (beta - 1)),
// and outside the open disk centered at k*a with radius k*|a|. Summing these
// counts over all a counts every containing pair twice.

#include "betadepth/dataset.hpp"
#include "betadepth/range_counting.hpp"

namespace betadepth {

/// Derived quantities for a nonzero translated point a and beta > 1.
/// Rounded values, for inspection and as pruning hints.
struct LemmaTwoGeometry {
  PlanarPoint a;
  double beta = 2.0;
  double k = 1.0;
  PlanarPoint p;  // foot of the halfplane boundary: ((beta - 1) / beta) * a
  PlanarPoint c;  // disk center k * a
  double r_sq = 0.0;

  HalfplaneQuery halfplane() const;
  DiskQuery disk() const;
};

/// Throws std::invalid_argument for a zero vector or beta <= 1.
LemmaTwoGeometry lemma_two_geometry(const PlanarPoint& a, double beta);

/// Halfplane and disk test for nonzero a, b and beta > 1, evaluated exactly.
bool origin_in_region_via_lemma(const PlanarPoint& a, const PlanarPoint& b, double beta);
bool origin_in_region_via_lemma(const Displacement& a, const Displacement& b, double beta);

/// Region counted for one translated point a. For beta == 1 the disk is
/// dropped and the halfplane becomes a . b <= 0.
class LemmaTwoRegion {
 public:
  LemmaTwoRegion(const Displacement& a, double beta);

  Coverage classify(const Box& box) const;
  bool contains(const Displacement& b) const;

 private:
  Displacement a_;
  double beta_;
  double shrink_;  // (beta - 1) / beta, rounded; only used by the float filter
  double norm_sq_;
  double l1_;
  HalfplaneQuery halfplane_;
  DiskQuery disk_;
};

/// Exact raw count equal to beta_depth_brute(q, s, beta). Requires d = 2, n >= 2, beta >= 1.
DepthResult beta_depth_fast(const PlanarPoint& q, const Dataset& s, double beta,
                            std::size_t leaf_size = CountingIndex::kDefaultLeafSize);

}  // namespace betadepth
