// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// The core computation: the distance PDF between two uniform random points,
// one per polygon, as
//
//   f(r) = r / (area(a) * area(b)) * integral over theta in [0, 2pi] of
//          area( (b shifted by (r cos theta, r sin theta)) ∩ a )
//
// evaluated with composite trapezoid (or midpoint) quadrature in theta, plus
// the equivalent triangle-decomposition mixture pipeline. All functions are
// pure; evaluations at different r are independent and may run in parallel,
// and the summation order is fixed so results do not depend on the worker
// count.

#pragma once

#include <vector>

#include "polydist/geometry.hpp"

namespace polydist {

enum class ThetaScheme { midpoint, trapezoid };

struct QuadratureConfig {
  int theta_divisions = 360;  // >= 8
  int r_points = 200;         // >= 2
  ThetaScheme scheme = ThetaScheme::trapezoid;

  void validate() const;  // throws InvalidInputError
};

// Sampled PDF curve on an ascending r grid spanning the support.
struct DistanceDistribution {
  std::vector<double> r_grid;
  std::vector<double> pdf_values;  // same length, all >= 0
  double r_min = 0.0;
  double r_max = 0.0;
  double area_a = 0.0;
  double area_b = 0.0;
};

struct CdfPoint {
  double r;
  double F;
};

// area( (b shifted by (r cos theta, r sin theta)) ∩ a ).
double overlap(const Polygon& a, const Polygon& b, double r, double theta);

// f(r) by the polar-decomposition formula. r must be finite and >= 0
// (InvalidInputError otherwise); f(0) = 0 and f is exactly 0 outside the
// support bounds.
double pdf_at(const Polygon& a, const Polygon& b, double r,
              const QuadratureConfig& config = {});

// Same, for already-prepared regions (no re-triangulation per call).
double pdf_at_prepared(const PreparedPolygon& a, const PreparedPolygon& b,
                       double r, const QuadratureConfig& config);

// f sampled on a uniform grid of config.r_points values covering the
// support inclusive. workers > 1 parallelizes over grid points; the result
// is identical for any worker count.
DistanceDistribution pdf_curve(const Polygon& a, const Polygon& b,
                               const QuadratureConfig& config = {},
                               int workers = 1);

// Cumulative trapezoid of the PDF, clamped to [0, 1]: monotone, F(r_min)=0.
std::vector<CdfPoint> cdf_curve(const DistanceDistribution& dist);

// The triangle-decomposition route: triangulate both polygons, compute each
// triangle-pair PDF, and mix with weights area(Ti)*area(Tj)/(area(p)*area(q)).
// Agrees with pdf_curve pointwise up to floating-point roundoff.
DistanceDistribution pdf_via_triangle_sum(const Polygon& p, const Polygon& q,
                                          const QuadratureConfig& config = {},
                                          int workers = 1);

// Trapezoid integral of the sampled PDF over its r grid.
double trapezoid_integral(const DistanceDistribution& dist);

// Tolerance for the "integrates to one" check: max(1e-2, 10/theta_divisions).
double normalization_epsilon(const QuadratureConfig& config);

}  // namespace polydist
