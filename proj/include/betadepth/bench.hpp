#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace betadepth {

struct BenchConfig {
  std::size_t max_n = 100000;
  std::size_t brute_cap = 10000;
  std::size_t repetitions = 3;
  std::uint64_t seed = 7;
  double beta = 2.0;  // beta used for the beta_fast and second brute rows
};

struct BenchRow {
  std::size_t n = 0;
  std::string engine;
  double beta = 1.0;
  double median_seconds = 0.0;
  std::uint64_t raw_count = 0;
};

/// Median wall time in seconds of `reps` calls.
double median_seconds(const std::function<void()>& work, std::size_t reps);

/// Sizes 10^3, 10^4, 10^5 up to max_n (or just max_n when it is below 10^3).
std::vector<std::size_t> bench_sizes(std::size_t max_n);

/// Times spherical_fast (beta 1), beta_fast (beta 1 and config.beta) and brute
/// force (both betas, n <= brute_cap) on one uniform query per size. Throws
/// std::logic_error if engines disagree and std::invalid_argument for
/// max_n < 2.
std::vector<BenchRow> run_bench(const BenchConfig& config);

}  // namespace betadepth
