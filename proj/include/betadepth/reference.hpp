#pragma once

// Brute-force oracles: O(d n^2) pairwise beta-skeleton depth in any dimension
// and O(n^3) planar simplicial depth.

#include <span>

#include "betadepth/dataset.hpp"

namespace betadepth {

/// Counts unordered pairs {i < j} whose closed influence region contains q.
/// Throws on dimension mismatch, n < 2 or beta < 1.
DepthResult beta_depth_brute(std::span<const double> q, const Dataset& s, double beta);

inline DepthResult beta_depth_brute(const PlanarPoint& q, const Dataset& s, double beta) {
  const double coords[2] = {q.x, q.y};
  return beta_depth_brute(std::span<const double>(coords, 2), s, beta);
}

/// Closed triangle test via orientation signs. A collinear triple contains q
/// only when q lies on the segment it spans.
bool triangle_contains(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c,
                       const PlanarPoint& q);

/// Counts closed triangles over 3-subsets of s containing q. Requires d = 2, n >= 3.
DepthResult simplicial_depth_brute(const PlanarPoint& q, const Dataset& s);

}  // namespace betadepth
