// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// Planar primitives: shoelace areas, ear-clipping triangulation, line and
// circle-line intersections, convex triangle clipping, polygon overlap area
// and support bounds. All types are immutable after construction and all
// operations are pure, so everything here is safe to use from multiple
// threads without synchronization.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polydist/errors.hpp"

namespace polydist {

// Points closer than this (per axis, in input length units) are treated as
// coincident during clipping and construction.
inline constexpr double kCoincidentTol = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

// Cross product of (b - a) and (c - a); > 0 when a,b,c turn counter-clockwise.
inline double orient(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double distance(Point a, Point b);

struct Bbox {
  double min_x, min_y, max_x, max_y;
};

Bbox bounding_box(std::span<const Point> pts);

// Raw shoelace sum over an ordered ring: 1/2 * sum(x_i*y_{i+1} - x_{i+1}*y_i)
// with cyclic wraparound. Positive for counter-clockwise rings, negative for
// clockwise ones; no validation is performed.
double signed_area(std::span<const Point> ring);

// A counter-clockwise triangle. Produced validated by make_ccw_triangle and
// by triangulate; clipping assumes CCW order.
struct Triangle {
  Point a, b, c;
};

double area(const Triangle& t);
Triangle translate(const Triangle& t, double dx, double dy);

// Validates finiteness and non-degeneracy, reorders to CCW when needed.
Triangle make_ccw_triangle(Point a, Point b, Point c);

// Simple polygon, vertices stored counter-clockwise. The constructor
// enforces: >= 3 vertices, finite coordinates, no repeated consecutive
// vertices, positive area, and a simple (non self-intersecting) boundary;
// clockwise input is reversed. Violations throw PolygonValidationError
// naming the rule.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  // Positive area, cached at construction. translate() carries the cache
  // over unchanged, so area is preserved exactly under translation.
  double area() const { return area_; }

  Bbox bbox() const { return bbox_; }

  // Trusted constructor for internally produced rings that are known to be
  // simple and CCW (e.g. convex clip results). Skips the O(n^2) checks.
  static Polygon unchecked(std::vector<Point> ccw_vertices, double area);

 private:
  struct Trusted {};
  Polygon(std::vector<Point> v, double area, Trusted);

  std::vector<Point> vertices_;
  double area_ = 0.0;
  Bbox bbox_{};
};

inline double signed_area(const Polygon& p) { return p.area(); }

Polygon translate(const Polygon& p, double dx, double dy);

struct TriangleDecomposition {
  std::vector<Triangle> triangles;
  double source_area = 0.0;
};

// Ear-clipping decomposition of a simple polygon (convex or concave, no
// holes) into interior-disjoint CCW triangles. Exactly n-2 triangles for
// polygons with no collinear vertices; collinear "straight" vertices are
// dropped without emitting a degenerate triangle.
TriangleDecomposition triangulate(const Polygon& p);

// Intersection of the infinite lines through (p1,p2) and (p3,p4) by the
// determinant formula; empty when the denominator is zero (parallel lines).
std::optional<Point> line_intersection(Point p1, Point p2, Point p3, Point p4);

// Intersections of the circle of given radius centered at the origin with
// the infinite line through p1, p2. Returns 0, 1 (tangent) or 2 points.
std::vector<Point> circle_line_intersection(double radius, Point p1, Point p2);

// Intersection area of two CCW triangles (Sutherland-Hodgman half-plane
// clipping of `subject` against the three edges of `clip`); >= 0, and 0
// when the interiors are disjoint.
double triangle_intersection_area(const Triangle& subject,
                                  const Triangle& clip);

// Intersection polygon of two CCW triangles: 3-6 CCW vertices, or empty
// when the interiors are disjoint or the overlap has zero area.
std::optional<Polygon> convex_clip(const Triangle& subject,
                                   const Triangle& clip);

// Area of a ∩ b, computed as the sum of pairwise triangle clip areas over
// the two triangulations.
double intersection_area(const Polygon& a, const Polygon& b);

struct DistanceBounds {
  double r_min;
  double r_max;
};

// Support of the inter-point distance: r_min is 0 when the closures
// intersect, otherwise the minimum boundary (segment-to-segment) distance;
// r_max is the maximum vertex-to-vertex distance.
DistanceBounds distance_bounds(const Polygon& a, const Polygon& b);

// Triangulated polygon with per-triangle bounding boxes, for repeated
// shifted-overlap queries. Queries are const and thread-safe.
class PreparedPolygon {
 public:
  explicit PreparedPolygon(const Polygon& p);
  explicit PreparedPolygon(const Triangle& t);

  double area() const { return area_; }
  const std::vector<Triangle>& triangles() const { return tris_; }

  // Area of (other shifted by (dx, dy)) ∩ this. Triangle pairs whose
  // bounding boxes are disjoint are skipped (their clip area is exactly 0),
  // so the result is identical to the unpruned pairwise sum. Summation
  // order is fixed: other's triangles outer, this's triangles inner.
  double overlap_with_shifted(const PreparedPolygon& other, double dx,
                              double dy) const;

 private:
  void build(std::vector<Triangle> tris, double area);

  std::vector<Triangle> tris_;
  std::vector<double> min_x_, min_y_, max_x_, max_y_;  // per-triangle boxes
  Bbox bbox_{};
  double area_ = 0.0;
};

// Minimum distance between two segments (0 when they intersect or touch).
double segment_distance(Point p1, Point p2, Point q1, Point q2);

// Crossing-number point-in-polygon test; boundary points unspecified.
bool point_in_polygon(Point p, const Polygon& poly);

}  // namespace polydist
