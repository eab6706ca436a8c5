#include "betadepth/compute.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "betadepth/beta_fast.hpp"
#include "betadepth/reference.hpp"
#include "betadepth/spherical.hpp"

namespace betadepth {

Engine parse_engine(std::string_view name) {
  if (name == "auto") return Engine::automatic;
  if (name == "brute") return Engine::brute;
  if (name == "fast") return Engine::fast;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

Method resolve_method(Engine engine, std::size_t dim, double beta) {
  require_beta(beta);
  const Method fast = beta == 1.0 ? Method::spherical_fast : Method::beta_fast;
  switch (engine) {
    case Engine::brute: return Method::brute;
    case Engine::fast:
      if (dim != 2) {
        throw std::invalid_argument("fast engine requires planar data, got dimension " +
                                    std::to_string(dim));
      }
      return fast;
    case Engine::automatic: return dim == 2 ? fast : Method::brute;
  }
  return Method::brute;
}

namespace {

DepthResult run_one(Method method, std::span<const double> q, const Dataset& data, double beta) {
  switch (method) {
    case Method::brute: return beta_depth_brute(q, data, beta);
    case Method::spherical_fast: return spherical_depth_fast({q[0], q[1]}, data);
    case Method::beta_fast: return beta_depth_fast({q[0], q[1]}, data, beta);
  }
  throw std::logic_error("unhandled method");
}

}  // namespace

ComputeOutcome compute_depths(const Dataset& data, const Dataset& queries,
                              const ComputeConfig& config) {
  if (data.size() < 2) throw std::invalid_argument("need at least 2 data points");
  if (!queries.empty() && queries.dim() != data.dim()) {
    throw std::invalid_argument("query dimension " + std::to_string(queries.dim()) +
                                " does not match data dimension " + std::to_string(data.dim()));
  }
  ComputeOutcome out;
  out.method = resolve_method(config.engine, data.dim(), config.beta);
  out.results.reserve(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    out.results.push_back(run_one(out.method, queries.point(i), data, config.beta));
  }

  const bool audit = config.audit.value_or(data.size() <= ComputeConfig::kAuditDefaultMaxN);
  if (!audit || out.method == Method::brute || queries.empty()) return out;

  const std::size_t samples = std::min(queries.size(), ComputeConfig::kAuditSamples);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = s * queries.size() / samples;
    const auto check = beta_depth_brute(queries.point(i), data, config.beta);
    if (check.raw_count != out.results[i].raw_count) {
      throw std::runtime_error("audit mismatch at query " + std::to_string(i) + ": " +
                               std::string(to_string(out.method)) + " gave " +
                               std::to_string(out.results[i].raw_count) + ", brute gave " +
                               std::to_string(check.raw_count));
    }
    ++out.audited;
  }
  return out;
}

}  // namespace betadepth
