#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "betadepth/dataset.hpp"

namespace betadepth {

enum class Engine { automatic, brute, fast };

/// Parses "auto", "brute" or "fast"; throws std::invalid_argument otherwise.
Engine parse_engine(std::string_view name);

struct ComputeConfig {
  double beta = 1.0;
  Engine engine = Engine::automatic;
  /// Cross-check fast results against brute force on sampled queries.
  /// Unset means on when the dataset has at most kAuditDefaultMaxN points.
  std::optional<bool> audit;

  static constexpr std::size_t kAuditDefaultMaxN = 500;
  static constexpr std::size_t kAuditSamples = 16;
};

struct ComputeOutcome {
  std::vector<DepthResult> results;  // one per query, in input order
  Method method = Method::brute;
  std::size_t audited = 0;
};

/// Method an engine choice resolves to for a dataset dimension and beta.
/// Throws when `fast` is requested for d != 2.
Method resolve_method(Engine engine, std::size_t dim, double beta);

/// Depth of every query row against the data. Throws on dimension mismatch,
/// n < 2, beta < 1, or an audit disagreement.
ComputeOutcome compute_depths(const Dataset& data, const Dataset& queries,
                              const ComputeConfig& config);

}  // namespace betadepth
