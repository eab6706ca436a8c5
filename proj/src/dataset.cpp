#include "betadepth/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace betadepth {

Dataset::Dataset(std::size_t dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw std::invalid_argument("dataset dimension must be >= 1");
  if (coords_.size() % dim_ != 0) {
    throw std::invalid_argument("coordinate count " + std::to_string(coords_.size()) +
                                " is not a multiple of dimension " + std::to_string(dim_));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i])) {
      throw std::invalid_argument("non-finite coordinate in point " + std::to_string(i / dim_));
    }
  }
}

Dataset Dataset::from_planar(std::span<const PlanarPoint> points) {
  std::vector<double> coords;
  coords.reserve(points.size() * 2);
  for (const auto& p : points) {
    coords.push_back(p.x);
    coords.push_back(p.y);
  }
  return Dataset(2, std::move(coords));
}

Dataset Dataset::from_points(std::span<const PointD> points) {
  if (points.empty()) throw std::invalid_argument("cannot infer dimension of an empty point list");
  const std::size_t d = points.front().size();
  std::vector<double> coords;
  coords.reserve(points.size() * d);
  for (const auto& p : points) {
    if (p.size() != d) throw std::invalid_argument("points of mixed dimension");
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return Dataset(d, std::move(coords));
}

std::vector<PlanarPoint> Dataset::planar_points() const {
  require_planar(*this);
  std::vector<PlanarPoint> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = planar(i);
  return out;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::spherical_fast: return "spherical_fast";
    case Method::beta_fast: return "beta_fast";
  }
  return "unknown";
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::uint64_t choose3(std::uint64_t n) {
  if (n < 3) return 0;
  // n*(n-1) is even and n*(n-1)*(n-2) divisible by 6.
  return n * (n - 1) / 2 * (n - 2) / 3;
}

DepthResult pair_result(std::uint64_t raw, std::size_t n, Method method, double beta) {
  DepthResult r;
  r.raw_count = raw;
  r.n = n;
  r.method = method;
  r.beta = beta;
  const auto total = choose2(n);
  r.normalized = total == 0 ? 0.0 : static_cast<double>(raw) / static_cast<double>(total);
  return r;
}

DepthResult simplicial_result(std::uint64_t raw, std::size_t n) {
  DepthResult r;
  r.raw_count = raw;
  r.n = n;
  r.method = Method::brute;
  const auto total = choose3(n);
  r.normalized = total == 0 ? 0.0 : static_cast<double>(raw) / static_cast<double>(total);
  return r;
}

void require_planar(const Dataset& s) {
  if (s.dim() != 2) {
    throw std::invalid_argument("planar dataset required, got dimension " + std::to_string(s.dim()));
  }
}

void require_finite(const PlanarPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw std::invalid_argument("query point has a non-finite coordinate");
  }
}

}  // namespace betadepth
