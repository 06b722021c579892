// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include "polydist/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "polydist/kernels.hpp"

namespace polydist {
namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

bool nearly_coincident(Point a, Point b) {
  return std::fabs(a.x - b.x) <= kCoincidentTol &&
         std::fabs(a.y - b.y) <= kCoincidentTol;
}

// Collinear p assumed; is p within the bounding box of segment (a, b)?
bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Any contact between the two closed segments, touching included.
bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
  const double o1 = orient(p1, p2, q1);
  const double o2 = orient(p1, p2, q2);
  const double o3 = orient(q1, q2, p1);
  const double o4 = orient(q1, q2, p2);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
      ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return true;
  }
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

void validate_ring(const std::vector<Point>& v) {
  if (v.size() < 3) {
    throw PolygonValidationError("polygon must have at least 3 vertices (has " +
                                 std::to_string(v.size()) + ")");
  }
  for (const Point& p : v) {
    if (!finite(p)) {
      throw PolygonValidationError("polygon has a non-finite coordinate");
    }
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (nearly_coincident(v[i], v[(i + 1) % n])) {
      throw PolygonValidationError(
          "polygon has repeated consecutive vertices at index " +
          std::to_string(i));
    }
  }
}

// Simplicity: no two non-adjacent edges may touch, and no adjacent edge may
// fold back over its neighbor (zero-angle spike).
void validate_simple(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = v[(i + n - 1) % n];
    const Point cur = v[i];
    const Point next = v[(i + 1) % n];
    if (orient(prev, cur, next) == 0 && dot(prev - cur, next - cur) > 0) {
      throw PolygonValidationError(
          "polygon boundary is self-intersecting (spike at vertex " +
          std::to_string(i) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        throw PolygonValidationError(
            "polygon boundary is self-intersecting (edges " +
            std::to_string(i) + " and " + std::to_string(j) + " cross)");
      }
    }
  }
}

// Inside-or-on test against a CCW triangle.
bool point_in_tri_closed(Point a, Point b, Point c, Point p) {
  return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

// --- Sutherland-Hodgman clipping of a convex ring by a half plane ------

// Each half-plane pass emits at most input + crossings <= 2 * input points,
// so three passes over a triangle need at most 3 -> 6 -> 12 -> 24 slots.
struct ClipRing {
  Point pts[24];
  int n = 0;
};

// Keeps the side with orient(e1, e2, p) >= 0 (left of e1->e2).
void clip_half_plane(const ClipRing& in, Point e1, Point e2, ClipRing& out) {
  out.n = 0;
  if (in.n == 0) return;
  Point prev = in.pts[in.n - 1];
  double dprev = orient(e1, e2, prev);
  for (int i = 0; i < in.n; ++i) {
    const Point cur = in.pts[i];
    const double dcur = orient(e1, e2, cur);
    if (dprev >= 0) {
      out.pts[out.n++] = prev;
      if (dcur < 0) {
        const double t = dprev / (dprev - dcur);
        out.pts[out.n++] = prev + t * (cur - prev);
      }
    } else if (dcur >= 0) {
      const double t = dprev / (dprev - dcur);
      out.pts[out.n++] = prev + t * (cur - prev);
    }
    prev = cur;
    dprev = dcur;
  }
}

// Ring of subject clipped by the three edges of the CCW clip triangle.
ClipRing clip_triangles(const Triangle& subject, const Triangle& clip) {
  ClipRing a, b;
  a.n = 3;
  a.pts[0] = subject.a;
  a.pts[1] = subject.b;
  a.pts[2] = subject.c;
  clip_half_plane(a, clip.a, clip.b, b);
  clip_half_plane(b, clip.b, clip.c, a);
  clip_half_plane(a, clip.c, clip.a, b);
  return b;
}

double ring_area(const ClipRing& r) {
  if (r.n < 3) return 0.0;
  double s = 0.0;
  for (int i = 0; i < r.n; ++i) {
    const Point& p = r.pts[i];
    const Point& q = r.pts[(i + 1) % r.n];
    s += p.x * q.y - q.x * p.y;
  }
  return 0.5 * s;
}

}  // namespace

double distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

Bbox bounding_box(std::span<const Point> pts) {
  Bbox b{std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity()};
  for (const Point& p : pts) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

double signed_area(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return 0.5 * s;
}

double area(const Triangle& t) { return 0.5 * orient(t.a, t.b, t.c); }

Triangle translate(const Triangle& t, double dx, double dy) {
  return {{t.a.x + dx, t.a.y + dy},
          {t.b.x + dx, t.b.y + dy},
          {t.c.x + dx, t.c.y + dy}};
}

Triangle make_ccw_triangle(Point a, Point b, Point c) {
  if (!finite(a) || !finite(b) || !finite(c)) {
    throw PolygonValidationError("triangle has a non-finite coordinate");
  }
  double cr = orient(a, b, c);
  if (cr < 0) {
    std::swap(b, c);
    cr = -cr;
  }
  const Bbox box = bounding_box(std::array<Point, 3>{a, b, c});
  const double w = box.max_x - box.min_x;
  const double h = box.max_y - box.min_y;
  if (!(cr > 1e-14 * (w * w + h * h))) {
    throw PolygonValidationError("degenerate triangle (zero area)");
  }
  return {a, b, c};
}

Polygon::Polygon(std::vector<Point> v, double a, Trusted)
    : vertices_(std::move(v)), area_(a), bbox_(bounding_box(vertices_)) {}

Polygon Polygon::unchecked(std::vector<Point> ccw_vertices, double area) {
  return Polygon(std::move(ccw_vertices), area, Trusted{});
}

Polygon::Polygon(std::vector<Point> v) {
  validate_ring(v);
  validate_simple(v);  // before the area check: a bow-tie has zero area
  double a = signed_area(v);
  if (a < 0) {  // normalize to CCW
    std::reverse(v.begin(), v.end());
    a = -a;
  }
  bbox_ = bounding_box(v);
  const double w = bbox_.max_x - bbox_.min_x;
  const double h = bbox_.max_y - bbox_.min_y;
  if (!(a > 1e-14 * (w * w + h * h))) {
    throw PolygonValidationError(
        "degenerate polygon (zero area / collinear vertices)");
  }
  vertices_ = std::move(v);
  area_ = a;
}

Polygon translate(const Polygon& p, double dx, double dy) {
  std::vector<Point> v;
  v.reserve(p.size());
  for (const Point& q : p.vertices()) v.push_back({q.x + dx, q.y + dy});
  return Polygon::unchecked(std::move(v), p.area());
}

TriangleDecomposition triangulate(const Polygon& poly) {
  const std::vector<Point>& v = poly.vertices();
  std::vector<int> ring(v.size());
  std::iota(ring.begin(), ring.end(), 0);

  std::vector<Triangle> tris;
  tris.reserve(v.size() - 2);
  std::size_t pos = 0;

  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      const std::size_t ip = (pos + k) % m;
      const std::size_t iprev = (ip + m - 1) % m;
      const std::size_t inext = (ip + 1) % m;
      const Point prev = v[ring[iprev]];
      const Point cur = v[ring[ip]];
      const Point next = v[ring[inext]];
      if (orient(prev, cur, next) <= 0) continue;  // reflex or straight
      bool blocked = false;
      for (std::size_t t = 0; t < m && !blocked; ++t) {
        if (t == ip || t == iprev || t == inext) continue;
        blocked = point_in_tri_closed(prev, cur, next, v[ring[t]]);
      }
      if (blocked) continue;
      tris.push_back({prev, cur, next});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(ip));
      pos = (ip + 1) % ring.size();  // move past the junction: balances fans
      clipped = true;
    }
    if (!clipped) {
      // No strict ear. A vertex whose neighbors straddle it on one line
      // carries no area; drop it and retry.
      for (std::size_t ip = 0; ip < m && !clipped; ++ip) {
        const Point prev = v[ring[(ip + m - 1) % m]];
        const Point cur = v[ring[ip]];
        const Point next = v[ring[(ip + 1) % m]];
        if (orient(prev, cur, next) == 0 && dot(prev - cur, next - cur) < 0) {
          ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(ip));
          pos = ip % ring.size();
          clipped = true;
        }
      }
    }
    if (!clipped) {
      throw InternalError("ear clipping found no ear; polygon is degenerate");
    }
  }

  const Point a = v[ring[0]];
  const Point b = v[ring[1]];
  const Point c = v[ring[2]];
  if (orient(a, b, c) > 0) tris.push_back({a, b, c});

  double sum = 0.0;
  for (const Triangle& t : tris) sum += area(t);
  // The absolute floor covers shoelace cancellation: the polygon area is a
  // sum of coordinate products, so its rounding error scales with the
  // squared coordinate magnitude, not with the area itself.
  const Bbox box = poly.bbox();
  const double mag = std::max({std::fabs(box.min_x), std::fabs(box.max_x),
                               std::fabs(box.min_y), std::fabs(box.max_y)});
  const double tol = 1e-9 * poly.area() +
                     8.0 * static_cast<double>(v.size()) *
                         std::numeric_limits<double>::epsilon() * mag * mag;
  if (std::fabs(sum - poly.area()) > tol) {
    throw InternalError("triangulation area mismatch");
  }
  return {std::move(tris), poly.area()};
}

std::optional<Point> line_intersection(Point p1, Point p2, Point p3,
                                       Point p4) {
  const double denom = (p1.x - p2.x) * (p3.y - p4.y) -
                       (p1.y - p2.y) * (p3.x - p4.x);
  if (denom == 0.0) return std::nullopt;
  const double d12 = p1.x * p2.y - p2.x * p1.y;
  const double d34 = p3.x * p4.y - p4.x * p3.y;
  return Point{(d12 * (p3.x - p4.x) - (p1.x - p2.x) * d34) / denom,
               (d12 * (p3.y - p4.y) - (p1.y - p2.y) * d34) / denom};
}

std::vector<Point> circle_line_intersection(double radius, Point p1,
                                            Point p2) {
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw InvalidInputError("circle radius must be positive and finite");
  }
  const double dx = p2.x - p1.x;
  const double dy = p2.y - p1.y;
  const double dr2 = dx * dx + dy * dy;
  const double det = p1.x * p2.y - p2.x * p1.y;
  const double disc = radius * radius * dr2 - det * det;
  if (disc < 0) return {};
  const double sgn_dy = dy < 0 ? -1.0 : 1.0;  // sgn*(0) = 1
  const double root = std::sqrt(disc);
  const Point plus{(det * dy + sgn_dy * dx * root) / dr2,
                   (-det * dx + std::fabs(dy) * root) / dr2};
  if (disc == 0) return {plus};  // tangent
  const Point minus{(det * dy - sgn_dy * dx * root) / dr2,
                    (-det * dx - std::fabs(dy) * root) / dr2};
  return {plus, minus};
}

double triangle_intersection_area(const Triangle& subject,
                                  const Triangle& clip) {
  const ClipRing r = clip_triangles(subject, clip);
  return std::max(0.0, ring_area(r));
}

std::optional<Polygon> convex_clip(const Triangle& subject,
                                   const Triangle& clip) {
  const ClipRing r = clip_triangles(subject, clip);
  if (r.n < 3) return std::nullopt;
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(r.n));
  for (int i = 0; i < r.n; ++i) {
    if (out.empty() || !nearly_coincident(out.back(), r.pts[i])) {
      out.push_back(r.pts[i]);
    }
  }
  while (out.size() > 1 && nearly_coincident(out.front(), out.back())) {
    out.pop_back();
  }
  if (out.size() < 3) return std::nullopt;
  const double a = signed_area(out);
  if (!(a > 0)) return std::nullopt;
  return Polygon::unchecked(std::move(out), a);
}

double intersection_area(const Polygon& a, const Polygon& b) {
  return PreparedPolygon(a).overlap_with_shifted(PreparedPolygon(b), 0.0, 0.0);
}

bool point_in_polygon(Point p, const Polygon& poly) {
  const std::vector<Point>& v = poly.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

double segment_distance(Point p1, Point p2, Point q1, Point q2) {
  if (segments_intersect(p1, p2, q1, q2)) return 0.0;
  return std::min(std::min(point_segment_distance(q1, p1, p2),
                           point_segment_distance(q2, p1, p2)),
                  std::min(point_segment_distance(p1, q1, q2),
                           point_segment_distance(p2, q1, q2)));
}

DistanceBounds distance_bounds(const Polygon& a, const Polygon& b) {
  const std::vector<Point>& va = a.vertices();
  const std::vector<Point>& vb = b.vertices();
  const std::size_t na = va.size();
  const std::size_t nb = vb.size();

  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < na && dmin > 0; ++i) {
    for (std::size_t j = 0; j < nb && dmin > 0; ++j) {
      dmin = std::min(dmin, segment_distance(va[i], va[(i + 1) % na], vb[j],
                                             vb[(j + 1) % nb]));
    }
  }
  if (dmin > 0 && (point_in_polygon(va[0], b) || point_in_polygon(vb[0], a))) {
    dmin = 0.0;  // one region contains the other
  }

  double dmax = 0.0;
  for (const Point& p : va) {
    for (const Point& q : vb) dmax = std::max(dmax, distance(p, q));
  }
  return {dmin, dmax};
}

PreparedPolygon::PreparedPolygon(const Polygon& p) {
  build(triangulate(p).triangles, p.area());
}

PreparedPolygon::PreparedPolygon(const Triangle& t) {
  build({t}, polydist::area(t));
}

void PreparedPolygon::build(std::vector<Triangle> tris, double total_area) {
  tris_ = std::move(tris);
  const std::size_t n = tris_.size();
  min_x_.resize(n);
  min_y_.resize(n);
  max_x_.resize(n);
  max_y_.resize(n);
  bbox_ = {std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    const Triangle& t = tris_[i];
    min_x_[i] = std::min(t.a.x, std::min(t.b.x, t.c.x));
    min_y_[i] = std::min(t.a.y, std::min(t.b.y, t.c.y));
    max_x_[i] = std::max(t.a.x, std::max(t.b.x, t.c.x));
    max_y_[i] = std::max(t.a.y, std::max(t.b.y, t.c.y));
    bbox_.min_x = std::min(bbox_.min_x, min_x_[i]);
    bbox_.min_y = std::min(bbox_.min_y, min_y_[i]);
    bbox_.max_x = std::max(bbox_.max_x, max_x_[i]);
    bbox_.max_y = std::max(bbox_.max_y, max_y_[i]);
  }
  area_ = total_area;
}

double PreparedPolygon::overlap_with_shifted(const PreparedPolygon& other,
                                             double dx, double dy) const {
  if (other.bbox_.min_x + dx > bbox_.max_x ||
      other.bbox_.max_x + dx < bbox_.min_x ||
      other.bbox_.min_y + dy > bbox_.max_y ||
      other.bbox_.max_y + dy < bbox_.min_y) {
    return 0.0;
  }
  const std::size_t na = tris_.size();
  constexpr std::size_t kStack = 256;
  unsigned char stack_mask[kStack];
  std::vector<unsigned char> heap_mask;
  unsigned char* mask = stack_mask;
  if (na > kStack) {
    heap_mask.resize(na);
    mask = heap_mask.data();
  }
  const kernels::KernelSet& k = kernels::active_kernels();

  double sum = 0.0;
  for (std::size_t j = 0; j < other.tris_.size(); ++j) {
    const double qminx = other.min_x_[j] + dx;
    const double qminy = other.min_y_[j] + dy;
    const double qmaxx = other.max_x_[j] + dx;
    const double qmaxy = other.max_y_[j] + dy;
    if (qminx > bbox_.max_x || qmaxx < bbox_.min_x || qminy > bbox_.max_y ||
        qmaxy < bbox_.min_y) {
      continue;
    }
    const Triangle shifted = translate(other.tris_[j], dx, dy);
    k.box_overlap(qminx, qminy, qmaxx, qmaxy, min_x_.data(), min_y_.data(),
                  max_x_.data(), max_y_.data(), na, mask);
    for (std::size_t i = 0; i < na; ++i) {
      if (mask[i]) sum += triangle_intersection_area(tris_[i], shifted);
    }
  }
  return sum;
}

}  // namespace polydist
