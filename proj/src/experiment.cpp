#include "betadepth/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "betadepth/beta_fast.hpp"
#include "betadepth/reference.hpp"
#include "betadepth/sampling.hpp"
#include "betadepth/spherical.hpp"

namespace betadepth {

namespace {

double ratio(double num, double den) {
  return den == 0.0 ? std::numeric_limits<double>::infinity() : num / den;
}

class RangeAccumulator {
 public:
  void add(double v) {
    stat_.min = std::min(stat_.min, v);
    stat_.max = std::max(stat_.max, v);
  }
  RangeStat get() const { return stat_; }

 private:
  RangeStat stat_{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

}  // namespace

bool lens_dominates(const ExperimentRow& row) { return row.ld_raw >= row.sphd_raw; }

bool spherical_bounds_simplicial(const ExperimentRow& row, std::size_t n_data) {
  return static_cast<std::uint64_t>(n_data - 2) * row.sphd_raw >= 2 * row.sd_raw;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.n_data < 3) throw std::invalid_argument("experiment needs at least 3 data points");
  if (!(config.half_width > 0.0) || !std::isfinite(config.half_width)) {
    throw std::invalid_argument("half width must be positive and finite");
  }
  PointSampler sampler(config.seed);
  const auto data_points = sampler.in_square(config.n_data, config.half_width);
  const auto query_points = sampler.in_square(config.n_query, config.half_width);
  const Dataset data = Dataset::from_planar(data_points);

  ExperimentReport report;
  report.config = config;
  report.rows.reserve(query_points.size());
  RangeAccumulator sd, sphd, ld, sphd_sd, ld_sd, ld_sphd;
  for (std::size_t i = 0; i < query_points.size(); ++i) {
    const PlanarPoint q = query_points[i];
    ExperimentRow row;
    row.query_index = i;
    row.q = q;
    const auto simplicial = simplicial_depth_brute(q, data);
    const auto spherical = spherical_depth_fast(q, data);
    const auto lens = beta_depth_fast(q, data, 2.0);
    row.sd_raw = simplicial.raw_count;
    row.sphd_raw = spherical.raw_count;
    row.ld_raw = lens.raw_count;
    row.sd = simplicial.normalized;
    row.sphd = spherical.normalized;
    row.ld = lens.normalized;

    sd.add(row.sd);
    sphd.add(row.sphd);
    ld.add(row.ld);
    sphd_sd.add(ratio(row.sphd, row.sd));
    ld_sd.add(ratio(row.ld, row.sd));
    ld_sphd.add(ratio(row.ld, row.sphd));
    report.summary.lens_dominates_spherical &= lens_dominates(row);
    report.summary.spherical_two_thirds_simplicial &=
        spherical_bounds_simplicial(row, config.n_data);
    report.rows.push_back(row);
  }
  report.summary.sd = sd.get();
  report.summary.sphd = sphd.get();
  report.summary.ld = ld.get();
  report.summary.sphd_over_sd = sphd_sd.get();
  report.summary.ld_over_sd = ld_sd.get();
  report.summary.ld_over_sphd = ld_sphd.get();
  return report;
}

}  // namespace betadepth
