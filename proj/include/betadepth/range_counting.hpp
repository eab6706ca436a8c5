#pragma once

// Static counting tree over planar points for the two query shapes used by
// the beta-skeleton engine: closed halfplanes and closed halfplanes minus an
// open disk.
//
// Nodes are pruned by conservative floating-point box tests; a box is only
// taken whole or skipped when the float margin certifies it. Everything else
// is decided per point by exact predicates, so tree counts always equal
// linear-scan counts.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "betadepth/geometry.hpp"

namespace betadepth {

struct Box {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  bool contains(const PlanarPoint& p) const {
    return min_x <= p.x && p.x <= max_x && min_y <= p.y && p.y <= max_y;
  }
};

enum class Coverage { none, all, partial };

/// Closed set {b : normal . b <= offset}.
struct HalfplaneQuery {
  PlanarPoint normal;
  double offset = 0.0;

  Coverage classify(const Box& box) const;
  bool contains(const Displacement& b) const;
};

/// Open set {b : |b - center|^2 < radius_sq}.
struct DiskQuery {
  PlanarPoint center;
  double radius_sq = 0.0;

  Coverage classify(const Box& box) const;
  bool contains(const Displacement& b) const;
};

/// Closed halfplane with the open disk removed.
struct HalfplaneMinusOpenDisk {
  HalfplaneQuery halfplane;
  DiskQuery disk;

  Coverage classify(const Box& box) const;
  bool contains(const Displacement& b) const {
    return halfplane.contains(b) && !disk.contains(b);
  }
};

/// Box classification with the float margin widened by `rel_slack` times the
/// magnitudes involved, for callers whose query parameters are themselves
/// rounded images of exact ones.
Coverage classify_halfplane(const HalfplaneQuery& h, const Box& box, double rel_slack);
Coverage classify_open_disk(const DiskQuery& d, const Box& box, double rel_slack);

/// Anything the tree can count: certified box classification plus an exact
/// point predicate.
template <class R>
concept CountableRegion = requires(const R& r, const Box& box, const Displacement& p) {
  { r.classify(box) } -> std::same_as<Coverage>;
  { r.contains(p) } -> std::same_as<bool>;
};

class CountingIndex {
 public:
  struct Node {
    Box box;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    // Children are left and left + 1; zero for a leaf.
    std::uint32_t left = 0;

    bool is_leaf() const { return left == 0; }
    std::size_t count() const { return end - begin; }
  };

  static constexpr std::size_t kDefaultLeafSize = 16;

  explicit CountingIndex(std::vector<Displacement> points,
                         std::size_t leaf_size = kDefaultLeafSize);

  std::size_t size() const { return points_.size(); }
  std::size_t leaf_size() const { return leaf_size_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  /// Points in tree order: each leaf owns the slice [begin, end).
  const std::vector<Displacement>& points() const { return points_; }

  template <CountableRegion R>
  std::size_t count(const R& region) const {
    if (nodes_.empty()) return 0;
    return count_from(0, region);
  }

 private:
  template <class R>
  std::size_t count_from(std::uint32_t id, const R& region) const {
    const Node& node = nodes_[id];
    switch (region.classify(node.box)) {
      case Coverage::none: return 0;
      case Coverage::all: return node.count();
      case Coverage::partial: break;
    }
    if (node.is_leaf()) {
      std::size_t hits = 0;
      for (std::uint32_t k = node.begin; k < node.end; ++k) {
        if (region.contains(points_[k])) ++hits;
      }
      return hits;
    }
    return count_from(node.left, region) + count_from(node.left + 1, region);
  }

  void build(std::uint32_t id, std::uint32_t begin, std::uint32_t end);

  std::vector<Displacement> points_;
  std::vector<Node> nodes_;
  std::size_t leaf_size_;
};

CountingIndex build_counting_index(std::span<const PlanarPoint> points,
                                   std::size_t leaf_size = CountingIndex::kDefaultLeafSize);

/// Exact count of indexed points with normal . b <= offset. Throws on a zero normal.
std::size_t count_halfplane(const CountingIndex& index, const HalfplaneQuery& h);

/// Exact count of points in the halfplane and outside the open disk.
/// Throws on a zero normal or a non-positive radius.
std::size_t count_halfplane_minus_open_disk(const CountingIndex& index, const HalfplaneQuery& h,
                                            const DiskQuery& d);

// Linear-scan oracles.
std::size_t count_halfplane_linear(std::span<const PlanarPoint> points, const HalfplaneQuery& h);
std::size_t count_halfplane_minus_open_disk_linear(std::span<const PlanarPoint> points,
                                                   const HalfplaneQuery& h, const DiskQuery& d);

}  // namespace betadepth
