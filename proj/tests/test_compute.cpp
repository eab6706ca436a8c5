#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "betadepth/bench.hpp"
#include "betadepth/compute.hpp"
#include "betadepth/experiment.hpp"
#include "betadepth/io.hpp"
#include "betadepth/sampling.hpp"

using namespace betadepth;

TEST_CASE("engine resolution") {
  CHECK(parse_engine("auto") == Engine::automatic);
  CHECK_THROWS_AS(parse_engine("quick"), std::invalid_argument);
  CHECK(resolve_method(Engine::automatic, 2, 1.0) == Method::spherical_fast);
  CHECK(resolve_method(Engine::automatic, 2, 2.0) == Method::beta_fast);
  CHECK(resolve_method(Engine::automatic, 5, 2.0) == Method::brute);
  CHECK(resolve_method(Engine::brute, 2, 1.0) == Method::brute);
  CHECK_THROWS(resolve_method(Engine::fast, 3, 1.0));
}

TEST_CASE("auto and brute engines agree") {
  PointSampler sampler(41);
  const auto data = Dataset::from_planar(sampler.in_square(200, 10.0));
  const auto queries = Dataset::from_planar(sampler.in_square(30, 12.0));
  for (double beta : {1.0, 2.0, 4.5}) {
    ComputeConfig fast{beta, Engine::automatic, true};
    ComputeConfig brute{beta, Engine::brute, false};
    const auto a = compute_depths(data, queries, fast);
    const auto b = compute_depths(data, queries, brute);
    CHECK(a.audited > 0);
    CHECK(b.method == Method::brute);
    REQUIRE(a.results.size() == 30);
    for (std::size_t i = 0; i < 30; ++i) CHECK(a.results[i].raw_count == b.results[i].raw_count);
  }
}

TEST_CASE("compute in five dimensions uses brute force") {
  PointSampler sampler(43);
  std::vector<double> coords(5 * 12);
  for (auto& c : coords) c = sampler.uniform(-1, 1);
  const Dataset data(5, coords);
  const Dataset queries(5, std::vector<double>(5, 0.0));
  const auto out = compute_depths(data, queries, {2.0, Engine::automatic, std::nullopt});
  CHECK(out.method == Method::brute);
  CHECK(out.results.size() == 1);
  CHECK_THROWS(compute_depths(data, Dataset(2, {0.0, 0.0}), {}));
}

TEST_CASE("experiment is deterministic and satisfies the bounds") {
  const ExperimentConfig config{20, 5, 99, 10.0};
  const auto a = run_experiment(config);
  const auto b = run_experiment(config);
  std::ostringstream sa, sb;
  write_experiment_csv(sa, a);
  write_experiment_csv(sb, b);
  CHECK(sa.str() == sb.str());
  CHECK(experiment_json(a).dump() == experiment_json(b).dump());
  CHECK(a.rows.size() == 5);
  CHECK(a.summary.lens_dominates_spherical);
  CHECK(a.summary.spherical_two_thirds_simplicial);
  for (const auto& row : a.rows) {
    CHECK(lens_dominates(row));
    CHECK(spherical_bounds_simplicial(row, 20));
  }
  CHECK_THROWS(run_experiment({2, 5, 1, 10.0}));
}

TEST_CASE("bench engines agree at small sizes") {
  BenchConfig config;
  config.max_n = 400;
  config.repetitions = 1;
  const auto rows = run_bench(config);
  CHECK(rows.size() == 5);
  CHECK(bench_sizes(100000) == std::vector<std::size_t>{1000, 10000, 100000});
  CHECK(bench_sizes(400) == std::vector<std::size_t>{400});
  CHECK_THROWS_AS(bench_sizes(0), std::invalid_argument);
}
