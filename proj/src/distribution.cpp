// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include "polydist/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "polydist/errors.hpp"

namespace polydist {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shifted-overlap section at angle theta.
double overlap_at(const PreparedPolygon& a, const PreparedPolygon& b, double r,
                  double theta) {
  return a.overlap_with_shifted(b, r * std::cos(theta), r * std::sin(theta));
}

// Composite quadrature of theta -> overlap over [0, 2pi]. Node order is
// ascending, so the summation order is fixed.
double theta_integral(const PreparedPolygon& a, const PreparedPolygon& b,
                      double r, const QuadratureConfig& cfg) {
  const int n = cfg.theta_divisions;
  const double h = kTwoPi / n;
  double sum = 0.0;
  if (cfg.scheme == ThetaScheme::midpoint) {
    for (int k = 0; k < n; ++k) {
      sum += overlap_at(a, b, r, kTwoPi * (k + 0.5) / n);
    }
  } else {
    sum = 0.5 * (overlap_at(a, b, r, 0.0) + overlap_at(a, b, r, kTwoPi));
    for (int k = 1; k < n; ++k) {
      sum += overlap_at(a, b, r, kTwoPi * k / n);
    }
  }
  return h * sum;
}

void require_valid_r(double r) {
  if (!std::isfinite(r) || r < 0) {
    throw InvalidInputError("distance r must be finite and non-negative");
  }
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  g.back() = hi;
  return g;
}

// Runs fn(i) for i in [0, n) on `workers` threads; every index is computed
// exactly once into its own slot, so results are worker-count independent.
template <typename Fn>
void parallel_for(int n, int workers, const Fn& fn) {
  workers = std::clamp(workers, 1, n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

void QuadratureConfig::validate() const {
  if (theta_divisions < 8) {
    throw InvalidInputError("theta_divisions must be >= 8");
  }
  if (r_points < 2) {
    throw InvalidInputError("r_points must be >= 2");
  }
}

double overlap(const Polygon& a, const Polygon& b, double r, double theta) {
  return overlap_at(PreparedPolygon(a), PreparedPolygon(b), r, theta);
}

double pdf_at_prepared(const PreparedPolygon& a, const PreparedPolygon& b,
                       double r, const QuadratureConfig& config) {
  require_valid_r(r);
  config.validate();
  if (r == 0.0) return 0.0;
  const double c = r / (a.area() * b.area());
  return c * theta_integral(a, b, r, config);
}

double pdf_at(const Polygon& a, const Polygon& b, double r,
              const QuadratureConfig& config) {
  return pdf_at_prepared(PreparedPolygon(a), PreparedPolygon(b), r, config);
}

DistanceDistribution pdf_curve(const Polygon& a, const Polygon& b,
                               const QuadratureConfig& config, int workers) {
  config.validate();
  const DistanceBounds bounds = distance_bounds(a, b);
  const PreparedPolygon pa(a);
  const PreparedPolygon pb(b);

  DistanceDistribution dist;
  dist.r_grid = uniform_grid(bounds.r_min, bounds.r_max, config.r_points);
  dist.pdf_values.resize(dist.r_grid.size());
  dist.r_min = bounds.r_min;
  dist.r_max = bounds.r_max;
  dist.area_a = pa.area();
  dist.area_b = pb.area();

  parallel_for(config.r_points, workers, [&](int i) {
    const auto idx = static_cast<std::size_t>(i);
    dist.pdf_values[idx] = pdf_at_prepared(pa, pb, dist.r_grid[idx], config);
  });
  return dist;
}

std::vector<CdfPoint> cdf_curve(const DistanceDistribution& dist) {
  const std::size_t n = dist.r_grid.size();
  if (n == 0) return {};
  std::vector<CdfPoint> out(n);
  double acc = 0.0;
  out[0] = {dist.r_grid[0], 0.0};
  for (std::size_t i = 1; i < n; ++i) {
    acc += 0.5 * (dist.pdf_values[i] + dist.pdf_values[i - 1]) *
           (dist.r_grid[i] - dist.r_grid[i - 1]);
    out[i] = {dist.r_grid[i], std::clamp(acc, 0.0, 1.0)};
  }
  return out;
}

DistanceDistribution pdf_via_triangle_sum(const Polygon& p, const Polygon& q,
                                          const QuadratureConfig& config,
                                          int workers) {
  config.validate();
  const DistanceBounds bounds = distance_bounds(p, q);
  const TriangleDecomposition dp = triangulate(p);
  const TriangleDecomposition dq = triangulate(q);

  struct PairTerm {
    PreparedPolygon pi;
    PreparedPolygon pj;
    double weight;   // area(Ti) * area(Tj) / (area(p) * area(q))
    double r_lo;     // pair support: the term is exactly 0 outside
    double r_hi;
  };
  std::vector<PairTerm> terms;
  terms.reserve(dp.triangles.size() * dq.triangles.size());
  for (const Triangle& ti : dp.triangles) {
    // Triangles as 3-vertex polygons for the pair support bounds.
    const Polygon poly_i =
        Polygon::unchecked({ti.a, ti.b, ti.c}, area(ti));
    for (const Triangle& tj : dq.triangles) {
      const Polygon poly_j =
          Polygon::unchecked({tj.a, tj.b, tj.c}, area(tj));
      const DistanceBounds db = distance_bounds(poly_i, poly_j);
      terms.push_back({PreparedPolygon(ti), PreparedPolygon(tj),
                       area(ti) * area(tj) / (p.area() * q.area()), db.r_min,
                       db.r_max});
    }
  }

  DistanceDistribution dist;
  dist.r_grid = uniform_grid(bounds.r_min, bounds.r_max, config.r_points);
  dist.pdf_values.assign(dist.r_grid.size(), 0.0);
  dist.r_min = bounds.r_min;
  dist.r_max = bounds.r_max;
  dist.area_a = p.area();
  dist.area_b = q.area();

  parallel_for(config.r_points, workers, [&](int i) {
    const auto idx = static_cast<std::size_t>(i);
    const double r = dist.r_grid[idx];
    double sum = 0.0;
    for (const PairTerm& t : terms) {
      if (r == 0.0 || r < t.r_lo || r > t.r_hi) continue;
      const double f_pair =
          (r / (t.pi.area() * t.pj.area())) *
          theta_integral(t.pi, t.pj, r, config);
      sum += t.weight * f_pair;
    }
    dist.pdf_values[idx] = sum;
  });
  return dist;
}

double trapezoid_integral(const DistanceDistribution& dist) {
  double acc = 0.0;
  for (std::size_t i = 1; i < dist.r_grid.size(); ++i) {
    acc += 0.5 * (dist.pdf_values[i] + dist.pdf_values[i - 1]) *
           (dist.r_grid[i] - dist.r_grid[i - 1]);
  }
  return acc;
}

double normalization_epsilon(const QuadratureConfig& config) {
  return std::max(1e-2, 10.0 / config.theta_divisions);
}

}  // namespace polydist
