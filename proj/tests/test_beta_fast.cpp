#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "betadepth/beta_fast.hpp"
#include "betadepth/gadgets.hpp"
#include "betadepth/reference.hpp"
#include "betadepth/sampling.hpp"

using namespace betadepth;

TEST_CASE("lemma geometry") {
  const auto g = lemma_two_geometry({2, 0}, 2.0);
  CHECK(g.k == 1.0);
  CHECK(g.p == PlanarPoint{1, 0});
  CHECK(g.c == PlanarPoint{2, 0});
  CHECK(g.r_sq == 4.0);

  const auto g3 = lemma_two_geometry({0, 3}, 3.0);
  CHECK(g3.k == 0.75);
  CHECK(g3.p.x == 0.0);
  CHECK(g3.p.y == doctest::Approx(2.0));
  CHECK(g3.c == PlanarPoint{0, 2.25});
  CHECK(g3.r_sq == 81.0 / 16.0);

  const auto big = lemma_two_geometry({2, 0}, 1e6);
  CHECK(big.k == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(big.p.x == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(big.c.x == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(big.r_sq == doctest::Approx(1.0).epsilon(1e-5));

  CHECK_THROWS_AS(lemma_two_geometry({0, 0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(lemma_two_geometry({1, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("origin membership through the lemma") {
  for (double beta : {1.01, 1.5, 2.0, 7.0, 1e3}) {
    CHECK(origin_in_region_via_lemma(PlanarPoint{1, 0}, PlanarPoint{-1, 0}, beta));
  }
  CHECK_FALSE(origin_in_region_via_lemma(PlanarPoint{1, 0}, PlanarPoint{1, 0.01}, 2.0));
  CHECK_THROWS_AS(origin_in_region_via_lemma(PlanarPoint{0, 0}, PlanarPoint{1, 0}, 2.0),
                  std::invalid_argument);
}

TEST_CASE("beta depth examples") {
  const std::vector<PlanarPoint> axis{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto r = beta_depth_fast({0, 0}, Dataset::from_planar(axis), 2.0);
  CHECK(r.raw_count == 6);
  CHECK(r.method == Method::beta_fast);
  CHECK(r.beta == 2.0);

  const std::vector<double> distinct{1, 2, 3};
  const std::vector<double> dup{1, 2, 2};
  const double theta = gadget_angle(2.0);
  CHECK(beta_depth_fast({0, 0}, build_angle_gadget(distinct, theta), 2.0).raw_count == 3);
  CHECK(beta_depth_fast({0, 0}, build_angle_gadget(dup, theta), 2.0).raw_count == 5);
}

TEST_CASE("beta fast agrees with brute force") {
  PointSampler sampler(17);
  for (double beta : {1.0, 1.25, 2.0, 3.0, 10.0}) {
    for (int trial = 0; trial < 12; ++trial) {
      auto pts = sampler.in_square(2 + trial * 7, 10.0);
      if (trial % 3 == 0) pts.push_back(pts.front());
      const PlanarPoint q = trial % 4 == 1 ? pts.front() : sampler.in_square(10.0);
      const auto data = Dataset::from_planar(pts);
      CHECK(beta_depth_fast(q, data, beta, 1 + trial % 5).raw_count ==
            beta_depth_brute(q, data, beta).raw_count);
    }
  }
}

TEST_CASE("beta fast on integer grids with many ties") {
  PointSampler sampler(23);
  for (double beta : {1.0, 1.5, 2.0, 3.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PlanarPoint> pts;
      for (int i = 0; i < 60; ++i) {
        pts.push_back({std::floor(sampler.uniform(-3, 4)), std::floor(sampler.uniform(-3, 4))});
      }
      const auto data = Dataset::from_planar(pts);
      const PlanarPoint q{std::floor(sampler.uniform(-3, 4)), std::floor(sampler.uniform(-3, 4))};
      CHECK(beta_depth_fast(q, data, beta, 4).raw_count == beta_depth_brute(q, data, beta).raw_count);
    }
  }
}

TEST_CASE("beta fast input validation") {
  const std::vector<PlanarPoint> one{{1, 0}};
  CHECK_THROWS_AS(beta_depth_fast({0, 0}, Dataset::from_planar(one), 2.0), std::invalid_argument);
  const std::vector<PlanarPoint> two{{1, 0}, {0, 1}};
  CHECK_THROWS_AS(beta_depth_fast({0, 0}, Dataset::from_planar(two), 0.5), std::invalid_argument);
  const std::vector<PointD> three_d{{0, 0, 0}, {1, 1, 1}};
  CHECK_THROWS_AS(beta_depth_fast({0, 0}, Dataset::from_points(three_d), 2.0),
                  std::invalid_argument);
}
