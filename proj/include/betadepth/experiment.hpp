#pragma once

// Random-point comparison of simplicial, spherical and lens depth: data and
// queries uniform in a square, per-query depths plus min/max summaries.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "betadepth/geometry.hpp"

namespace betadepth {

struct ExperimentConfig {
  std::size_t n_data = 750;
  std::size_t n_query = 100;
  std::uint64_t seed = 1;
  double half_width = 10.0;
};

struct ExperimentRow {
  std::size_t query_index = 0;
  PlanarPoint q;
  std::uint64_t sd_raw = 0;
  std::uint64_t sphd_raw = 0;
  std::uint64_t ld_raw = 0;
  double sd = 0.0;
  double sphd = 0.0;
  double ld = 0.0;
};

struct RangeStat {
  double min = 0.0;
  double max = 0.0;
};

struct ExperimentSummary {
  RangeStat sd;
  RangeStat sphd;
  RangeStat ld;
  // A zero denominator yields +inf.
  RangeStat sphd_over_sd;
  RangeStat ld_over_sd;
  RangeStat ld_over_sphd;
  // Checked on integer counts.
  bool lens_dominates_spherical = true;    // LD >= SphD for every query
  bool spherical_two_thirds_simplicial = true;  // SphD >= (2/3) SD for every query
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
  ExperimentSummary summary;
};

/// LD >= SphD from raw pair counts.
bool lens_dominates(const ExperimentRow& row);
/// SphD/C(n,2) >= (2/3) SD/C(n,3), i.e. (n - 2) * sphd_raw >= 2 * sd_raw.
bool spherical_bounds_simplicial(const ExperimentRow& row, std::size_t n_data);

/// Data are drawn before queries from one sampler. Requires n_data >= 3 and
/// half_width > 0.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace betadepth
