#pragma once

// Element-uniqueness gadgets: point sets whose depth at the origin reveals
// whether a list of positive numbers has repeated values.

#include <cstdint>
#include <span>
#include <vector>

#include "betadepth/dataset.hpp"

namespace betadepth {

enum class GadgetKind { spherical, lens, general_beta };

struct GadgetSpec {
  std::vector<double> values;
  GadgetKind kind = GadgetKind::spherical;
  double beta = 2.0;  // used by general_beta
};

/// Four quarter-turn copies of (a_i, 1): (a_i, 1), (-1, a_i), (-a_i, -1),
/// (1, -a_i), stored block by block (all k = 0 points first). 4n points.
Dataset build_spherical_gadget(std::span<const double> values);

/// (b_i, 0) followed by (b_i cos theta, b_i sin theta). 2n points, 0 < theta < pi.
Dataset build_angle_gadget(std::span<const double> values, double theta);

/// Rotation angle cos^-1(1 - 1/beta) for beta > 1.
double gadget_angle(double beta);

/// Angle gadget for theta = cos^-1(1 - 1/beta), with each rotated copy moved
/// by at most a few ulps so that the pair {(b, 0), rotated b} lies in the
/// closed region S_beta exactly in double arithmetic.
Dataset build_beta_gadget(std::span<const double> values, double beta);

/// Maps any finite list to positive values by subtracting (min - 1) when some
/// value is <= 0; distinct inputs may merge only through rounding.
std::vector<double> shift_to_positive(std::span<const double> values);

struct SphericalDecision {
  bool unique = false;
  std::uint64_t raw_count = 0;
  std::uint64_t unique_count = 0;  // 4n^2 + 2n
};

struct LensDecision {
  bool unique = false;
  std::uint64_t duplicate_pairs = 0;  // c in n + 2c
  std::uint64_t raw_count = 0;
};

/// Spherical depth of the origin equals 4n^2 + 2n iff the values are distinct.
SphericalDecision decide_uniqueness_spherical(std::span<const double> values);

/// Lens depth of the origin equals n + 2c, c the number of equal-value pairs.
LensDecision decide_uniqueness_lens(std::span<const double> values);

/// Same decision with the cos^-1(1 - 1/beta) gadget and beta-skeleton depth.
LensDecision decide_uniqueness_beta(std::span<const double> values, double beta);

}  // namespace betadepth
