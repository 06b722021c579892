// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// The four-piece closed form below is transcribed term by term from its
// published display. Inverse cosecants and secants are reduced to principal
// asin/acos; the transcription is guarded by tests that check continuity at
// the interior breakpoints and that the law integrates to one.

#include "polydist/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polydist/errors.hpp"

namespace polydist {
namespace {

constexpr double kPi = std::numbers::pi;

// The piece formulas evaluate acos/asin at arguments that reach the domain
// boundary exactly (e.g. at r -> 1); clamp away rounding spill.
double safe_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }
double safe_asin(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }

double acsc(double x) { return safe_asin(1.0 / x); }
double asec(double x) { return safe_acos(1.0 / x); }

// Subexpression shared verbatim by the second and third pieces.
double bracket_23(double r) {
  const double r2 = r * r;
  const double s = std::sqrt(2 * r2 - 1);
  return 2 * (5 * s - 6) +
         r * (-std::sqrt(4 * r2 - 2) * std::sqrt(s / r2 + 1) +
              9 * std::sqrt(2 * s / r2 + 2) + 2 * r - 16) +
         4 * (r2 + 4) * acsc(2 * r / (1 - s));
}

double f1(double r) {
  const double r2 = r * r;
  const double s = std::sqrt(2 * r2 - 1);
  return 0.125 * (4 * s + r * std::sqrt(4 * r2 - 2) * std::sqrt(s / r2 + 1) +
                  7 * r * std::sqrt(2 * s / r2 + 2) +
                  r * std::sqrt(4 * r2 - 2) * std::sqrt(1 - s / r2) -
                  7 * r * std::sqrt(2 - 2 * s / r2) +
                  4 * (r2 + 2) * safe_acos((s + 1) / (2 * r))) -
         0.5 * (r2 + 2) * safe_acos(-(s - 1) / (2 * r));
}

double f2(double r) {
  const double r2 = r * r;
  return r2 / 2 + kPi * r2 / 4 - 3 * std::sqrt(1 - 1 / r2) * r - r2 * acsc(r) +
         0.125 * bracket_23(r) +
         0.5 * ((6 * std::sqrt(1 - 1 / r2) - r + 4) * r -
                2 * (r2 + 2) * asec(r) - 3) -
         safe_asin(1 / r) + safe_acos(1 / r) + 2;
}

double f3(double r) {
  const double r2 = r * r;
  const double sqrt2 = std::numbers::sqrt2;
  const double u = std::sqrt(r2 - 2);
  const double a = safe_acos(-(std::sqrt(2 * r2 - 4) - 2) / (2 * r));
  return 2 * r - 2 * safe_acos(1 / r) + 3.5 - r2 / 2 -
         2 * std::sqrt(4 * sqrt2 * u / r2 + 2) * r +
         2 * std::sqrt(1 - 1 / r2) * r - 0.5 * kPi * (r2 + 2) - sqrt2 * u +
         (r2 + 2) * a + 2 * a + 0.125 * bracket_23(r);
}

double f4(double r) {
  const double r2 = r * r;
  const double s = std::sqrt(2 * r2 - 1);
  return -r2 / 2 + 2 * std::sqrt(1 - 1 / r2) * r + std::sqrt(1 - 4 / r2) * r +
         0.125 * (-2 * r2 -
                  std::sqrt(4 * r2 - 2) * std::sqrt(s / r2 + 1) * r +
                  9 * std::sqrt(2 * s / r2 + 2) * r -
                  16 * std::sqrt(1 - 4 / r2) * r + 10 * s +
                  4 * (r2 + 4) * safe_asin((1 - s) / (2 * r)) +
                  4 * (r2 + 4) * safe_acos(2 / r) - 28) +
         2 * safe_asin(2 / r) - 2 * safe_acos(1 / r) - 2.5;
}

}  // namespace

PiecewisePdf::PiecewisePdf(std::vector<double> breakpoints,
                           std::vector<std::function<double(double)>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() != pieces_.size() + 1) {
    throw InvalidInputError("piecewise pdf needs pieces+1 breakpoints");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw InvalidInputError("piecewise pdf breakpoints must be ascending");
    }
  }
}

double PiecewisePdf::operator()(double r) const {
  if (r < breakpoints_.front() || r > breakpoints_.back()) return 0.0;
  // Half-open pieces [b_i, b_{i+1}); the final interval is closed. Values
  // are densities, so rounding noise below zero is clamped.
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (r < breakpoints_[i + 1] || i + 2 == breakpoints_.size()) {
      return std::max(0.0, pieces_[i](r));
    }
  }
  return 0.0;
}

double circles_coincident_pdf(double R, double r) {
  if (!(R > 0) || !std::isfinite(R)) {
    throw InvalidInputError("circle radius must be positive and finite");
  }
  if (!(r >= 0) || !std::isfinite(r)) {
    throw InvalidInputError("distance must be non-negative and finite");
  }
  if (r >= 2 * R) return 0.0;
  const double R2 = R * R;
  return (2 * r / (kPi * R2 * R2)) *
         (2 * R2 * std::acos(r / (2 * R)) -
          (r / 2) * std::sqrt(4 * R2 - r * r));
}

const PiecewisePdf& disjoint_triangles_example() {
  // The piece displays carry the theta-integral only; the density needs the
  // r / (area_A * area_B) factor of the distance-PDF formula, which is 4r
  // for these two half-unit-area triangles. Without it the law integrates
  // to ~0.183 instead of 1 and misses the quadrature, Monte Carlo, and
  // hand-derived first-piece values by exactly that factor.
  const auto with_prefactor = [](double (*piece)(double)) {
    return [piece](double r) { return 4.0 * r * piece(r); };
  };
  static const PiecewisePdf pdf(
      {1.0 / std::numbers::sqrt2, 1.0, std::numbers::sqrt2, 2.0,
       std::sqrt(5.0)},
      {with_prefactor(f1), with_prefactor(f2), with_prefactor(f3),
       with_prefactor(f4)});
  return pdf;
}

double disjoint_triangles_example_pdf(double r) {
  return disjoint_triangles_example()(r);
}

}  // namespace polydist
