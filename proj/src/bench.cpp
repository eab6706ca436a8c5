#include "betadepth/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "betadepth/beta_fast.hpp"
#include "betadepth/reference.hpp"
#include "betadepth/sampling.hpp"
#include "betadepth/spherical.hpp"

namespace betadepth {

double median_seconds(const std::function<void()>& work, std::size_t reps) {
  std::vector<double> times;
  times.reserve(std::max<std::size_t>(reps, 1));
  for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    work();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

std::vector<std::size_t> bench_sizes(std::size_t max_n) {
  if (max_n < 2) throw std::invalid_argument("bench needs max_n >= 2");
  std::vector<std::size_t> sizes;
  for (std::size_t n : {1000u, 10000u, 100000u}) {
    if (n <= max_n) sizes.push_back(n);
  }
  if (sizes.empty()) sizes.push_back(max_n);
  return sizes;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  require_beta(config.beta);
  std::vector<BenchRow> rows;
  PointSampler sampler(config.seed);
  for (const std::size_t n : bench_sizes(config.max_n)) {
    const Dataset data = Dataset::from_planar(sampler.in_square(n, 10.0));
    const PlanarPoint q = sampler.in_square(10.0);
    std::map<double, std::uint64_t> agreed;

    const auto record = [&](const char* engine, double beta, auto&& run) {
      DepthResult result;
      const double t = median_seconds([&] { result = run(); }, config.repetitions);
      const auto [it, inserted] = agreed.emplace(beta, result.raw_count);
      if (!inserted && it->second != result.raw_count) {
        throw std::logic_error(std::string("engine ") + engine + " disagrees at n=" +
                               std::to_string(n) + " beta=" + std::to_string(beta));
      }
      rows.push_back({n, engine, beta, t, result.raw_count});
    };

    record("spherical_fast", 1.0, [&] { return spherical_depth_fast(q, data); });
    record("beta_fast", 1.0, [&] { return beta_depth_fast(q, data, 1.0); });
    if (config.beta != 1.0) {
      record("beta_fast", config.beta, [&] { return beta_depth_fast(q, data, config.beta); });
    }
    if (n <= config.brute_cap) {
      record("brute", 1.0, [&] { return beta_depth_brute(q, data, 1.0); });
      if (config.beta != 1.0) {
        record("brute", config.beta, [&] { return beta_depth_brute(q, data, config.beta); });
      }
    }
  }
  return rows;
}

}  // namespace betadepth
