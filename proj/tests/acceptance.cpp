// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "betadepth/bench.hpp"
#include "betadepth/beta_fast.hpp"
#include "betadepth/experiment.hpp"
#include "betadepth/gadgets.hpp"
#include "betadepth/geometry.hpp"
#include "betadepth/range_counting.hpp"
#include "betadepth/reference.hpp"
#include "betadepth/sampling.hpp"
#include "betadepth/spherical.hpp"
#include "oracles.hpp"

using namespace betadepth;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_of(const std::function<void()>& work) {
  return median_seconds(work, 3);
}

// Exact (a - t).(b - t) <= 0 with rationals, independent of the library.
bool dot_criterion(PlanarPoint a, PlanarPoint b, PlanarPoint t) {
  const mpq_class ax = mpq_class(a.x) - mpq_class(t.x);
  const mpq_class ay = mpq_class(a.y) - mpq_class(t.y);
  const mpq_class bx = mpq_class(b.x) - mpq_class(t.x);
  const mpq_class by = mpq_class(b.y) - mpq_class(t.y);
  const mpq_class dot = ax * bx + ay * by;
  return sgn(dot) <= 0;
}

// Random point: real-valued most of the time, small integers otherwise so that
// boundary cases actually occur.
PlanarPoint mixed_point(PointSampler& s, int k) {
  if (k % 4 == 0) return {std::floor(s.uniform(-3, 4)), std::floor(s.uniform(-3, 4))};
  return s.in_square(10.0);
}

std::vector<double> distinct_values(PointSampler& s, std::size_t n) {
  std::vector<double> v;
  while (v.size() < n) {
    const double x = s.uniform(0.5, 100.0);
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  return v;
}

Outcome oracle_equivalence() {
  PointSampler s(1001);
  const auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0, mismatches = 0;
  for (std::size_t n : {10, 50, 300}) {
    for (double beta : {1.0, 1.5, 2.0, 3.0, 10.0}) {
      for (int k = 0; k < 200; ++k) {
        auto pts = s.in_square(n, 10.0);
        if (k < 20) {
          const auto from = static_cast<std::size_t>(s.unit() * n);
          const auto to = static_cast<std::size_t>(s.unit() * n);
          pts[to] = pts[from];
        }
        PlanarPoint q = s.in_square(10.0);
        if (k >= 20 && k < 40) q = pts[static_cast<std::size_t>(s.unit() * n)];
        const auto data = Dataset::from_planar(pts);
        const auto expected = beta_depth_brute(q, data, beta).raw_count;
        if (beta_depth_fast(q, data, beta).raw_count != expected) ++mismatches;
        if (beta == 1.0 && spherical_depth_fast(q, data).raw_count != expected) ++mismatches;
        ++instances;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && secs < 60.0,
          fmt("%zu instances, %zu mismatches, %.1f s (limit 60 s)", instances, mismatches, secs)};
}

Outcome lemma_one() {
  PointSampler s(1002);
  int mismatches = 0;
  for (int k = 0; k < 10000; ++k) {
    const PlanarPoint a = mixed_point(s, k), b = mixed_point(s, k), t = mixed_point(s, k);
    const double tq[2] = {t.x, t.y};
    const bool region = contains(influence_region({a.x, a.y}, {b.x, b.y}, 1.0), tq);
    if (region != dot_criterion(a, b, t)) ++mismatches;
  }
  return {mismatches == 0, fmt("10000 triples, %d mismatches", mismatches)};
}

Outcome lemma_two() {
  PointSampler s(1003);
  int mismatches = 0, total = 0;
  const double origin[2] = {0, 0};
  for (double beta : {1.5, 2.0, 3.0, 10.0}) {
    for (int k = 0; k < 10000; ++k) {
      const PlanarPoint a = mixed_point(s, k), b = mixed_point(s, k);
      if ((a.x == 0 && a.y == 0) || (b.x == 0 && b.y == 0)) {
        --k;
        continue;
      }
      ++total;
      const bool region = contains(influence_region({a.x, a.y}, {b.x, b.y}, beta), origin);
      if (region != origin_in_region_via_lemma(a, b, beta)) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%d pairs over 4 betas, %d mismatches", total, mismatches)};
}

Outcome spherical_gadget() {
  PointSampler s(1004);
  int bad = 0;
  for (std::uint64_t n = 2; n <= 50; ++n) {
    auto values = distinct_values(s, n);
    const auto unique = spherical_depth_fast({0, 0}, build_spherical_gadget(values)).raw_count;
    if (unique != 4 * n * n + 2 * n) ++bad;
    const auto i = 1 + static_cast<std::size_t>(s.unit() * (n - 1));
    values[i] = values[static_cast<std::size_t>(s.unit() * i)];
    const auto dup = spherical_depth_fast({0, 0}, build_spherical_gadget(values)).raw_count;
    if (dup < 4 * n * n + 2 * n + 4) ++bad;
  }
  return {bad == 0, fmt("n = 2..50, %d violations", bad)};
}

Outcome lens_gadget() {
  PointSampler s(1005);
  int bad = 0;
  for (std::uint64_t n = 2; n <= 50; ++n) {
    auto values = distinct_values(s, n);
    const auto g = build_beta_gadget(values, 2.0);
    if (beta_depth_fast({0, 0}, g, 2.0).raw_count != n) ++bad;
    if (beta_depth_brute(PlanarPoint{0, 0}, g, 2.0).raw_count != n) ++bad;

    // Plant duplicates by copying random earlier values.
    const auto copies = 1 + static_cast<std::size_t>(s.unit() * (n / 2));
    for (std::size_t c = 0; c < copies; ++c) {
      const auto i = 1 + static_cast<std::size_t>(s.unit() * (n - 1));
      values[i] = values[static_cast<std::size_t>(s.unit() * i)];
    }
    std::map<double, std::uint64_t> mult;
    for (double v : values) ++mult[v];
    std::uint64_t pairs = 0;
    for (const auto& [v, m] : mult) pairs += m * (m - 1) / 2;
    const auto dup = build_beta_gadget(values, 2.0);
    if (beta_depth_fast({0, 0}, dup, 2.0).raw_count != n + 2 * pairs) ++bad;
    if (beta_depth_brute(PlanarPoint{0, 0}, dup, 2.0).raw_count != n + 2 * pairs) ++bad;
  }
  return {bad == 0, fmt("n = 2..50 distinct and planted duplicates, %d violations", bad)};
}

Outcome general_beta_gadget() {
  PointSampler s(1006);
  int bad = 0, runs = 0;
  for (double beta : {1.5, 3.0, 5.0}) {
    for (std::uint64_t n = 1; n <= 20; ++n) {
      const auto values = distinct_values(s, n);
      const auto g = build_beta_gadget(values, beta);
      ++runs;
      if (beta_depth_brute(PlanarPoint{0, 0}, g, beta).raw_count != n) ++bad;
    }
  }
  return {bad == 0, fmt("%d gadgets, %d with raw_count != n", runs, bad)};
}

Outcome depth_inequalities() {
  const auto report = run_experiment({300, 100, 2024, 10.0});
  const auto& sum = report.summary;
  bool ok = sum.lens_dominates_spherical && sum.spherical_two_thirds_simplicial;

  oracle::Gen gen(1007);
  int lemma5_bad = 0, triangles = 0;
  while (triangles < 1000) {
    const auto a = gen.ipoint(1000), b = gen.ipoint(1000), c = gen.ipoint(1000),
               q = gen.ipoint(1000);
    if (!triangle_contains({double(a.x), double(a.y)}, {double(b.x), double(b.y)},
                           {double(c.x), double(c.y)}, {double(q.x), double(q.y)})) {
      continue;
    }
    ++triangles;
    const int disks = oracle::in_diametral_disk(a, b, q) + oracle::in_diametral_disk(b, c, q) +
                      oracle::in_diametral_disk(c, a, q);
    if (disks < 2) ++lemma5_bad;
  }

  PointSampler s(1008);
  int lemma6_bad = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 3 + static_cast<std::size_t>(s.unit() * 28);
    const auto data = Dataset::from_planar(s.in_square(n, 10.0));
    const PlanarPoint q = s.in_square(10.0);
    const auto sd = simplicial_depth_brute(q, data).raw_count;
    const auto sph = beta_depth_brute(q, data, 1.0).raw_count;
    if ((n - 2) * sph < 2 * sd) ++lemma6_bad;
  }
  ok = ok && lemma5_bad == 0 && lemma6_bad == 0;
  return {ok, fmt("LD>=SphD %s, SphD>=2/3 SD %s on 100 queries; triangle/disk %d of 1000 bad; "
                  "pair/triangle bound %d of 50 bad; observed min SphD/SD %.3f, min LD/SphD %.3f",
                  sum.lens_dominates_spherical ? "holds" : "fails",
                  sum.spherical_two_thirds_simplicial ? "holds" : "fails", lemma5_bad, lemma6_bad,
                  sum.sphd_over_sd.min, sum.ld_over_sphd.min)};
}

Outcome performance() {
  PointSampler s(1009);
  const auto small = Dataset::from_planar(s.in_square(10000, 10.0));
  const auto large = Dataset::from_planar(s.in_square(100000, 10.0));
  const PlanarPoint q = s.in_square(10.0);

  const double sph_small = seconds_of([&] { spherical_depth_fast(q, small); });
  const double sph_large = seconds_of([&] { spherical_depth_fast(q, large); });
  const double beta_small = seconds_of([&] { beta_depth_fast(q, small, 2.0); });
  const double beta_large = seconds_of([&] { beta_depth_fast(q, large, 2.0); });
  const double brute_small = seconds_of([&] { beta_depth_brute(q, small, 1.0); });

  const double brute_vs_fast = brute_small / sph_small;
  const double sph_ratio = sph_large / sph_small;
  const double beta_ratio = beta_large / beta_small;
  const bool ok = sph_large < 1.0 && brute_vs_fast >= 50.0 && sph_ratio < 20.0 && beta_ratio < 20.0;
  return {ok, fmt("spherical_fast n=1e5 %.3f s (limit 1 s); brute/spherical_fast at n=1e4 %.0fx "
                  "(limit >= 50x); 1e4->1e5 time ratio spherical_fast %.1f, beta_fast(2) %.1f "
                  "(limit < 20 each)",
                  sph_large, brute_vs_fast, sph_ratio, beta_ratio)};
}

Outcome range_counting() {
  PointSampler s(1010);
  int bad = 0, queries = 0;
  for (int set = 0; set < 10; ++set) {
    auto pts = s.in_square(1000, 10.0);
    if (set % 2 == 1) {
      for (auto& p : pts) p = {std::round(p.x), std::round(p.y)};
    }
    const auto index = build_counting_index(pts, 16);
    for (int k = 0; k < 100; ++k) {
      PlanarPoint a = s.in_square(5.0);
      double offset = s.uniform(-30, 30);
      DiskQuery d{s.in_square(10.0), s.uniform(0.5, 80.0)};
      if (k % 2 == 1) {
        a = {std::round(a.x), std::round(a.y)};
        offset = std::round(offset);
        d = {{std::round(d.center.x), std::round(d.center.y)}, std::round(d.radius_sq)};
      }
      if ((a.x == 0 && a.y == 0) || d.radius_sq == 0) {
        --k;
        continue;
      }
      const HalfplaneQuery h{a, offset};
      queries += 2;
      if (count_halfplane(index, h) != count_halfplane_linear(pts, h)) ++bad;
      if (count_halfplane_minus_open_disk(index, h, d) !=
          count_halfplane_minus_open_disk_linear(pts, h, d)) {
        ++bad;
      }
    }
  }
  return {bad == 0, fmt("%d queries over 10 sets of 1000 points, %d mismatches", queries, bad)};
}

}  // namespace

int main() {
  report(1, "oracle equivalence", oracle_equivalence);
  report(2, "diametral disk vs right-angle criterion", lemma_one);
  report(3, "origin membership via halfplane minus disk", lemma_two);
  report(4, "spherical uniqueness gadget", spherical_gadget);
  report(5, "lens uniqueness gadget", lens_gadget);
  report(6, "general beta gadget", general_beta_gadget);
  report(7, "depth inequalities", depth_inequalities);
  report(8, "performance separation", performance);
  report(9, "range counting correctness", range_counting);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
