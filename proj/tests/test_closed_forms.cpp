// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polydist/closed_forms.hpp"
#include "polydist/errors.hpp"
#include "support/quad.hpp"

using namespace polydist;
using testsupport::integrate_sqrt_endpoints;

TEST_CASE("coincident circles pdf: endpoint and reference values") {
  CHECK(circles_coincident_pdf(1.0, 0.0) == 0.0);
  CHECK(circles_coincident_pdf(1.0, 2.0) == 0.0);
  CHECK(circles_coincident_pdf(1.0, 2.5) == 0.0);
  // f(1) = (2/pi) (2 pi/3 - sqrt(3)/2)
  const double expected =
      (2.0 / std::numbers::pi) *
      (2.0 * std::numbers::pi / 3.0 - std::sqrt(3.0) / 2.0);
  CHECK(circles_coincident_pdf(1.0, 1.0) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(circles_coincident_pdf(1.0, 1.0) ==
        doctest::Approx(0.78198).epsilon(1e-4));
}

TEST_CASE("coincident circles pdf: input validation") {
  CHECK_THROWS_AS(circles_coincident_pdf(0.0, 1.0), InvalidInputError);
  CHECK_THROWS_AS(circles_coincident_pdf(-1.0, 1.0), InvalidInputError);
  CHECK_THROWS_AS(circles_coincident_pdf(1.0, -0.5), InvalidInputError);
  CHECK_THROWS_AS(
      circles_coincident_pdf(1.0, std::numeric_limits<double>::infinity()),
      InvalidInputError);
}

TEST_CASE("coincident circles pdf integrates to one") {
  for (const double R : {0.5, 1.0, 3.0}) {
    const double total = integrate_sqrt_endpoints(
        [R](double r) { return circles_coincident_pdf(R, r); }, 0.0, 2 * R);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("coincident circles pdf scaling law") {
  for (const double R : {0.5, 2.0, 7.5}) {
    for (const double r : {0.1, 0.7, 1.3, 1.9}) {
      CHECK(circles_coincident_pdf(R, r * R) ==
            doctest::Approx(circles_coincident_pdf(1.0, r) / R)
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("disjoint triangles pdf: zero outside the support") {
  CHECK(disjoint_triangles_example_pdf(0.0) == 0.0);
  CHECK(disjoint_triangles_example_pdf(0.5) == 0.0);
  CHECK(disjoint_triangles_example_pdf(std::sqrt(5.0) + 0.1) == 0.0);
  CHECK(disjoint_triangles_example_pdf(100.0) == 0.0);
}

TEST_CASE("disjoint triangles pdf integrates to one") {
  const auto& pdf = disjoint_triangles_example();
  const auto& bp = pdf.breakpoints();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    total += integrate_sqrt_endpoints(
        [](double r) { return disjoint_triangles_example_pdf(r); }, bp[i],
        bp[i + 1]);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("disjoint triangles pdf is continuous at interior breakpoints") {
  for (const double bp : {1.0, std::numbers::sqrt2, 2.0}) {
    const double eps = 1e-9;
    const double left = disjoint_triangles_example_pdf(bp - eps);
    const double right = disjoint_triangles_example_pdf(bp + eps);
    CHECK(std::fabs(left - right) < 1e-6);
  }
  // breakpoint evaluation is deterministic: the right-hand piece applies
  const double at_one = disjoint_triangles_example_pdf(1.0);
  const double just_right = disjoint_triangles_example_pdf(1.0 + 1e-12);
  CHECK(at_one == doctest::Approx(just_right).epsilon(1e-9));
}

TEST_CASE("disjoint triangles pdf is non-negative across the support") {
  const double lo = 1.0 / std::numbers::sqrt2;
  const double hi = std::sqrt(5.0);
  for (int i = 0; i < 1000; ++i) {
    const double r = lo + (hi - lo) * i / 999.0;
    CHECK(disjoint_triangles_example_pdf(r) >= 0.0);
  }
}

TEST_CASE("piecewise pdf validates its construction") {
  CHECK_THROWS_AS(PiecewisePdf({1.0, 0.5}, {[](double) { return 0.0; }}),
                  InvalidInputError);
  CHECK_THROWS_AS(PiecewisePdf({0.0, 1.0, 2.0}, {[](double) { return 0.0; }}),
                  InvalidInputError);
}
