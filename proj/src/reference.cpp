#include "betadepth/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace betadepth {

namespace {

bool same_signs(int a, int b, int c) {
  return (a >= 0 && b >= 0 && c >= 0) || (a <= 0 && b <= 0 && c <= 0);
}

bool within_span(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c,
                 const PlanarPoint& q) {
  const auto [min_x, max_x] = std::minmax({a.x, b.x, c.x});
  const auto [min_y, max_y] = std::minmax({a.y, b.y, c.y});
  return min_x <= q.x && q.x <= max_x && min_y <= q.y && q.y <= max_y;
}

}  // namespace

DepthResult beta_depth_brute(std::span<const double> q, const Dataset& s, double beta) {
  require_beta(beta);
  if (q.size() != s.dim()) {
    throw std::invalid_argument("query dimension " + std::to_string(q.size()) +
                                " does not match dataset dimension " + std::to_string(s.dim()));
  }
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("beta-skeleton depth needs at least 2 data points");

  std::uint64_t raw = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto xi = s.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (in_influence_region(xi, s.point(j), beta, q)) ++raw;
    }
  }
  return pair_result(raw, n, Method::brute, beta);
}

bool triangle_contains(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c,
                       const PlanarPoint& q) {
  const int o1 = orientation(a, b, q);
  const int o2 = orientation(b, c, q);
  const int o3 = orientation(c, a, q);
  if (!same_signs(o1, o2, o3)) return false;
  if (o1 == 0 && o2 == 0 && o3 == 0) return within_span(a, b, c, q);
  return true;
}

DepthResult simplicial_depth_brute(const PlanarPoint& q, const Dataset& s) {
  require_planar(s);
  require_finite(q);
  const std::size_t n = s.size();
  if (n < 3) throw std::invalid_argument("simplicial depth needs at least 3 data points");

  // side[i*n + j] = orientation(x_i, x_j, q); antisymmetric.
  std::vector<std::int8_t> side(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto o = static_cast<std::int8_t>(orientation(s.planar(i), s.planar(j), q));
      side[i * n + j] = o;
      side[j * n + i] = static_cast<std::int8_t>(-o);
    }
  }

  std::uint64_t raw = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int8_t* row_i = side.data() + i * n;
    for (std::size_t j = i + 1; j < n; ++j) {
      const int o1 = row_i[j];
      const std::int8_t* row_j = side.data() + j * n;
      for (std::size_t k = j + 1; k < n; ++k) {
        const int o2 = row_j[k];
        const int o3 = -row_i[k];
        if (!same_signs(o1, o2, o3)) continue;
        if (o1 == 0 && o2 == 0 && o3 == 0 &&
            !within_span(s.planar(i), s.planar(j), s.planar(k), q)) {
          continue;
        }
        ++raw;
      }
    }
  }
  return simplicial_result(raw, n);
}

}  // namespace betadepth
