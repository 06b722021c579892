// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared geometry fixtures: the disjoint right-triangle pair that the
// closed-form law applies to, the two validation polygons, and a few simple
// shapes.

#pragma once

#include <cmath>

#include "polydist/geometry.hpp"

namespace testsupport {

inline polydist::Polygon tri_abc() {
  return polydist::Polygon({{0, 2}, {1, 1}, {1, 2}});
}

inline polydist::Polygon tri_def() {
  return polydist::Polygon({{0, 0}, {1, 0}, {0, 1}});
}

inline polydist::Polygon poly1() {
  return polydist::Polygon({{0, 0}, {3, 0}, {2, 3}, {2, 1}});
}

inline polydist::Polygon poly2() {
  return polydist::Polygon({{3, 4}, {7, 4}, {5, 7}, {3, 6}, {1, 6}});
}

inline polydist::Polygon unit_square() {
  return polydist::Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline polydist::Polygon l_hexagon() {
  return polydist::Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

inline polydist::Polygon regular_ngon(int n, double radius = 1.0) {
  std::vector<polydist::Point> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * 3.14159265358979323846 * k / n;
    v.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return polydist::Polygon(std::move(v));
}

}  // namespace testsupport
