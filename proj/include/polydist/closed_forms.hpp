// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form distance PDFs used as ground truth for the numerical
// pipeline: the coincident-equal-circles law and the four-piece law for a
// fixed pair of disjoint right triangles.

#pragma once

#include <functional>
#include <vector>

namespace polydist {

// Piecewise real function of r: pieces[i] applies on
// [breakpoints[i], breakpoints[i+1]), the final interval is closed, and the
// value is 0 outside [breakpoints.front(), breakpoints.back()]. Evaluation
// exactly at an interior breakpoint uses the right-hand piece.
class PiecewisePdf {
 public:
  PiecewisePdf(std::vector<double> breakpoints,
               std::vector<std::function<double(double)>> pieces);

  double operator()(double r) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<std::function<double(double)>> pieces_;
};

// PDF of the distance between two independent uniform points in coincident
// circles of radius R:
//   f(r) = (2r / (pi R^4)) * (2 R^2 acos(r / 2R) - (r/2) sqrt(4R^2 - r^2))
// for r < 2R, else 0. Throws InvalidInputError for R <= 0 or negative /
// non-finite r.
double circles_coincident_pdf(double R, double r);

// Closed-form distance PDF for the fixed disjoint triangle pair
// {(0,2),(1,1),(1,2)} and {(0,0),(1,0),(0,1)}: four pieces over
// [1/sqrt(2), 1], [1, sqrt(2)], [sqrt(2), 2], [2, sqrt(5)], zero elsewhere.
// Inverse-trig terms use principal branches.
double disjoint_triangles_example_pdf(double r);

// The same law with its breakpoints exposed.
const PiecewisePdf& disjoint_triangles_example();

}  // namespace polydist
