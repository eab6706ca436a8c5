#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "betadepth/geometry.hpp"

namespace betadepth {

/// Multiset of points in R^d stored row-major. Duplicates are distinct members.
class Dataset {
 public:
  Dataset() = default;
  /// Throws std::invalid_argument on a non-finite coordinate, d == 0 or a
  /// coordinate count that is not a multiple of d.
  Dataset(std::size_t dim, std::vector<double> coords);

  static Dataset from_planar(std::span<const PlanarPoint> points);
  static Dataset from_points(std::span<const PointD> points);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  /// Requires dim() == 2.
  PlanarPoint planar(std::size_t i) const { return {coords_[2 * i], coords_[2 * i + 1]}; }
  std::vector<PlanarPoint> planar_points() const;

  std::span<const double> coords() const { return coords_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

enum class Method { brute, spherical_fast, beta_fast };

std::string_view to_string(Method m);

struct DepthResult {
  std::uint64_t raw_count = 0;
  double normalized = 0.0;
  std::size_t n = 0;
  Method method = Method::brute;
  /// Empty for simplicial depth.
  std::optional<double> beta;
};

std::uint64_t choose2(std::uint64_t n);
std::uint64_t choose3(std::uint64_t n);

/// Pair-based result: normalized = raw / C(n, 2).
DepthResult pair_result(std::uint64_t raw, std::size_t n, Method method, double beta);
/// Triangle-based result: normalized = raw / C(n, 3).
DepthResult simplicial_result(std::uint64_t raw, std::size_t n);

/// Raw pairs involving a point coincident with the query: m*(n - m) + C(m, 2).
inline std::uint64_t coincident_pairs(std::uint64_t m, std::uint64_t n) {
  return m * (n - m) + choose2(m);
}

void require_planar(const Dataset& s);
void require_finite(const PlanarPoint& p);

}  // namespace betadepth
