// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polydist/closed_forms.hpp"
#include "polydist/distribution.hpp"
#include "polydist/montecarlo.hpp"
#include "support/fixtures.hpp"
#include "support/random_polygons.hpp"

using namespace polydist;
using namespace testsupport;

TEST_CASE("sample_triangle parameterization boundaries") {
  const Triangle t = make_ccw_triangle({0, 0}, {4, 0}, {0, 3});
  const Point at_c = sample_triangle_from_uniforms(t, 0.0, 0.0);
  CHECK(at_c.x == t.c.x);
  CHECK(at_c.y == t.c.y);
  const Point at_a = sample_triangle_from_uniforms(t, 1.0, 1.0);
  CHECK(at_a.x == t.a.x);
  CHECK(at_a.y == t.a.y);
  const Point at_b = sample_triangle_from_uniforms(t, 0.0, 1.0);
  CHECK(at_b.x == t.b.x);
  CHECK(at_b.y == t.b.y);
  // unsorted pair maps the same way
  const Point swapped = sample_triangle_from_uniforms(t, 1.0, 0.0);
  CHECK(swapped.x == t.b.x);
}

TEST_CASE("sample_triangle is uniform: sub-triangle mass") {
  const Triangle t = make_ccw_triangle({0, 0}, {1, 0}, {0, 1});
  SplitMix64 gen(5150);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    const Point p = sample_triangle(t, gen);
    CHECK(p.x >= 0);
    CHECK(p.y >= 0);
    CHECK(p.x + p.y <= 1.0 + 1e-12);
    if (p.x + p.y < 0.5) ++hits;
  }
  CHECK(static_cast<double>(hits) / n == doctest::Approx(0.25).epsilon(0.04));
}

TEST_CASE("sample_triangle affine invariance (chi-square on 4x4 grid)") {
  const Triangle base = make_ccw_triangle({0, 0}, {1, 0}, {0, 1});
  // fixed affine map
  const auto apply = [](Point p) {
    return Point{2.0 * p.x + 0.5 * p.y + 1.0, -0.3 * p.x + 1.2 * p.y - 2.0};
  };
  const Triangle mapped =
      make_ccw_triangle(apply(base.a), apply(base.b), apply(base.c));

  const int n = 100000;
  SplitMix64 g1(11), g2(22);
  std::vector<Point> s1, s2;
  s1.reserve(n);
  s2.reserve(n);
  for (int i = 0; i < n; ++i) s1.push_back(apply(sample_triangle(base, g1)));
  for (int i = 0; i < n; ++i) s2.push_back(sample_triangle(mapped, g2));

  const Bbox box = bounding_box(std::span<const Point>(s2));
  const auto cell = [&](Point p) {
    int ix = static_cast<int>(4 * (p.x - box.min_x) / (box.max_x - box.min_x));
    int iy = static_cast<int>(4 * (p.y - box.min_y) / (box.max_y - box.min_y));
    ix = std::clamp(ix, 0, 3);
    iy = std::clamp(iy, 0, 3);
    return 4 * iy + ix;
  };
  std::vector<double> c1(16, 0), c2(16, 0);
  for (const Point& p : s1) ++c1[static_cast<std::size_t>(cell(p))];
  for (const Point& p : s2) ++c2[static_cast<std::size_t>(cell(p))];

  // two-sample chi-square over occupied cells
  double stat = 0;
  int dof = -1;
  for (int i = 0; i < 16; ++i) {
    const double tot = c1[static_cast<std::size_t>(i)] + c2[static_cast<std::size_t>(i)];
    if (tot < 10) continue;
    const double d = c1[static_cast<std::size_t>(i)] - c2[static_cast<std::size_t>(i)];
    stat += d * d / tot;
    ++dof;
  }
  REQUIRE(dof >= 1);
  CHECK(stat < chi2_critical_999(dof));  // p > 0.001
}

TEST_CASE("sample_polygon: single-triangle decomposition stays inside") {
  const Polygon tri = tri_def();
  const TriangleDecomposition d = triangulate(tri);
  SplitMix64 gen(303);
  for (int i = 0; i < 2000; ++i) {
    const Point p = sample_polygon(tri, d, gen);
    CHECK(p.x >= -1e-12);
    CHECK(p.y >= -1e-12);
    CHECK(p.x + p.y <= 1.0 + 1e-12);
  }
}

TEST_CASE("sample_polygon: unit square mean") {
  const Polygon sq = unit_square();
  const TriangleDecomposition d = triangulate(sq);
  SplitMix64 gen(8080);
  const int n = 100000;
  double mx = 0, my = 0;
  for (int i = 0; i < n; ++i) {
    const Point p = sample_polygon(sq, d, gen);
    mx += p.x;
    my += p.y;
  }
  CHECK(mx / n == doctest::Approx(0.5).epsilon(0.01));  // +/- 0.005
  CHECK(my / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("sample_polygon: area-weighted selection on the L hexagon") {
  const Polygon hexa = l_hexagon();
  const TriangleDecomposition d = triangulate(hexa);
  SplitMix64 gen(1234);
  const int n = 100000;
  int in_unit_square = 0;
  for (int i = 0; i < n; ++i) {
    const Point p = sample_polygon(hexa, d, gen);
    if (p.x <= 1.0 && p.y <= 1.0) ++in_unit_square;
  }
  CHECK(static_cast<double>(in_unit_square) / n ==
        doctest::Approx(1.0 / 3.0).epsilon(0.03));  // +/- 0.01
}

TEST_CASE("sample_polygon validates the decomposition") {
  const TriangleDecomposition wrong = triangulate(unit_square());
  SplitMix64 gen(1);
  CHECK_THROWS_AS(sample_polygon(l_hexagon(), wrong, gen), InvalidInputError);
}

TEST_CASE("empirical_distances: fixed points give a fixed distance") {
  const double e = 1e-7;
  const Polygon a({{0, 0}, {e, 0}, {0, e}});
  const Polygon b({{3, 4}, {3 + e, 4}, {3, 4 + e}});
  const SampleSet s = empirical_distances(a, b, 40, RandomSeed{5});
  CHECK(s.n_pairs == 1600);
  for (const double d : s.distances) {
    CHECK(d == doctest::Approx(5.0).epsilon(1e-6));
  }
}

TEST_CASE("empirical_distances: support containment and determinism") {
  const Polygon a = tri_abc();
  const Polygon b = tri_def();
  const DistanceBounds bounds = distance_bounds(a, b);
  const SampleSet s1 = empirical_distances(a, b, 500, RandomSeed{99});
  CHECK(s1.distances.front() >= bounds.r_min);
  CHECK(s1.distances.back() <= bounds.r_max);
  CHECK(std::is_sorted(s1.distances.begin(), s1.distances.end()));

  const SampleSet s2 = empirical_distances(a, b, 500, RandomSeed{99});
  CHECK(s1.distances == s2.distances);
  const SampleSet s3 = empirical_distances(a, b, 500, RandomSeed{99}, 3);
  CHECK(s1.distances == s3.distances);
  const SampleSet other = empirical_distances(a, b, 500, RandomSeed{100});
  CHECK(s1.distances != other.distances);
}

TEST_CASE("empirical_distances: input validation and resource limit") {
  const Polygon sq = unit_square();
  CHECK_THROWS_AS(empirical_distances(sq, sq, 0, RandomSeed{1}),
                  InvalidInputError);
  CHECK_THROWS_AS(empirical_distances(sq, sq, 20001, RandomSeed{1}),
                  ResourceLimitError);
}

TEST_CASE("ecdf basics") {
  const SampleSet s{{1.0, 2.0, 2.0, 3.0}, 4};
  CHECK(ecdf(s, 0.5) == 0.0);
  CHECK(ecdf(s, 1.0) == doctest::Approx(0.25));
  CHECK(ecdf(s, 2.0) == doctest::Approx(0.75));
  CHECK(ecdf(s, 3.0) == 1.0);
  CHECK(ecdf(s, 9.0) == 1.0);
}

TEST_CASE("histogram: degenerate all-equal sample occupies a single bin") {
  const SampleSet s{{2.5, 2.5, 2.5}, 3};
  const auto hist = histogram_pdf(s, 10);
  CHECK(hist.size() == 1);
  CHECK(hist[0].center == doctest::Approx(2.5));
}

TEST_CASE("histogram: uniform synthetic sample") {
  SplitMix64 gen(64);
  const std::size_t n = 100000;
  std::vector<double> u(n);
  for (double& x : u) x = gen.uniform01();
  std::sort(u.begin(), u.end());
  const SampleSet s{std::move(u), n};
  const int bins = 10;
  const auto hist = histogram_pdf(s, bins);
  REQUIRE(hist.size() == 10);
  const double tol = 5.0 / std::sqrt(static_cast<double>(n) / bins);
  double integral = 0.0;
  const double width = (s.distances.back() - s.distances.front()) / bins;
  for (const auto& hb : hist) {
    CHECK(std::fabs(hb.density - 1.0) < tol);
    integral += hb.density * width;
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(histogram_pdf(s, 1), InvalidInputError);
}

TEST_CASE("triangle-pair sample at n=4000: histogram and KS vs references") {
  const SampleSet s =
      empirical_distances(tri_abc(), tri_def(), 4000, RandomSeed{2718});
  const auto hist = histogram_pdf(s, 40);
  double worst = 0.0;
  for (const auto& hb : hist) {
    worst = std::max(
        worst, std::fabs(hb.density - disjoint_triangles_example_pdf(hb.center)));
  }
  CHECK(worst < 0.05);

  const std::vector<CdfPoint> cdf = cdf_curve(pdf_curve(tri_abc(), tri_def(), {}));
  CHECK(ks_statistic(s, cdf).statistic < 0.01);
}

TEST_CASE("validation-polygon sample at n=4000 matches the curve, KS < 0.01") {
  const Polygon a = poly1();
  const Polygon b = poly2();
  const SampleSet s = empirical_distances(a, b, 4000, RandomSeed{7});
  const std::vector<CdfPoint> cdf = cdf_curve(pdf_curve(a, b, {}));
  CHECK(ks_statistic(s, cdf).statistic < 0.01);
}

TEST_CASE("ks_statistic: self comparison and total mismatch") {
  const Polygon sq = unit_square();
  const SampleSet s = empirical_distances(sq, sq, 60, RandomSeed{17});
  // the ECDF itself as the reference CDF
  std::vector<CdfPoint> self;
  self.reserve(s.distances.size());
  for (std::size_t i = 0; i < s.distances.size(); ++i) {
    self.push_back({s.distances[i],
                    static_cast<double>(i + 1) / static_cast<double>(s.n_pairs)});
  }
  const KsResult r0 = ks_statistic(s, self);
  CHECK(r0.statistic <= 1.0 / static_cast<double>(s.n_pairs) + 1e-12);
  CHECK_FALSE(r0.extrapolated);

  const std::vector<CdfPoint> zero{{0.0, 0.0}, {5.0, 0.0}};
  const KsResult r1 = ks_statistic(s, zero);
  CHECK(r1.statistic == doctest::Approx(1.0));
}

TEST_CASE("ks_statistic flags extrapolation and validates monotonicity") {
  const SampleSet s{{0.5, 1.5, 2.5}, 3};
  const std::vector<CdfPoint> grid{{1.0, 0.2}, {2.0, 0.9}};
  const KsResult r = ks_statistic(s, grid);
  CHECK(r.extrapolated);
  const std::vector<CdfPoint> bad{{1.0, 0.5}, {2.0, 0.1}};
  CHECK_THROWS_AS(ks_statistic(s, bad), InvalidInputError);
}

TEST_CASE("ks_statistic against the numeric cdf is small for the pair") {
  QuadratureConfig cfg;
  const DistanceDistribution dist = pdf_curve(tri_abc(), tri_def(), cfg);
  const std::vector<CdfPoint> cdf = cdf_curve(dist);
  const SampleSet s =
      empirical_distances(tri_abc(), tri_def(), 1500, RandomSeed{31415});
  const KsResult ks = ks_statistic(s, cdf);
  CHECK(ks.statistic < 0.03);
}
