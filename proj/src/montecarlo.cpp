// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include "polydist/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "polydist/errors.hpp"
#include "polydist/kernels.hpp"

namespace polydist {

Point sample_triangle_from_uniforms(const Triangle& t, double u1, double u2) {
  const double u = std::min(u1, u2);
  const double v = std::max(u1, u2);
  return u * t.a + (v - u) * t.b + (1 - v) * t.c;
}

Point sample_triangle(const Triangle& t, SplitMix64& gen) {
  const double u1 = gen.uniform01();
  const double u2 = gen.uniform01();
  return sample_triangle_from_uniforms(t, u1, u2);
}

Point sample_polygon(const Polygon& p, const TriangleDecomposition& d,
                     SplitMix64& gen) {
  if (d.triangles.empty() ||
      std::fabs(d.source_area - p.area()) > 1e-9 * p.area()) {
    throw InvalidInputError("decomposition does not match the polygon");
  }
  const double u = gen.uniform01();
  // Cumulative area fractions; pick the first triangle with u < cumulative.
  double cum = 0.0;
  std::size_t pick = d.triangles.size() - 1;
  for (std::size_t i = 0; i < d.triangles.size(); ++i) {
    cum += area(d.triangles[i]) / d.source_area;
    if (u < cum) {
      pick = i;
      break;
    }
  }
  return sample_triangle(d.triangles[pick], gen);
}

SampleSet empirical_distances(const Polygon& a, const Polygon& b,
                              std::size_t n, RandomSeed seed, int workers) {
  if (n < 1) throw InvalidInputError("need at least one sample per polygon");
  if (n > kMaxSamplesPerPolygon) {
    throw ResourceLimitError(
        "n = " + std::to_string(n) + " exceeds the per-polygon sample limit " +
        std::to_string(kMaxSamplesPerPolygon) + " (n^2 distances are stored)");
  }
  const TriangleDecomposition da = triangulate(a);
  const TriangleDecomposition db = triangulate(b);

  SplitMix64 gen(seed);
  std::vector<double> ax(n), ay(n), bx(n), by(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = sample_polygon(a, da, gen);
    ax[i] = p.x;
    ay[i] = p.y;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = sample_polygon(b, db, gen);
    bx[i] = p.x;
    by[i] = p.y;
  }

  std::vector<double> out(n * n);
  const kernels::KernelSet& k = kernels::active_kernels();
  const int nworkers =
      std::clamp(workers, 1, static_cast<int>(std::min<std::size_t>(n, 64)));
  if (nworkers == 1) {
    k.cross_distances(ax.data(), ay.data(), n, bx.data(), by.data(), n,
                      out.data());
  } else {
    // Row blocks; each thread writes its own slots, so the buffer content
    // is independent of the worker count.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    const std::size_t chunk = (n + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
      const std::size_t lo = std::min(n, w * chunk);
      const std::size_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        k.cross_distances(ax.data() + lo, ay.data() + lo, hi - lo, bx.data(),
                          by.data(), n, out.data() + lo * n);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::sort(out.begin(), out.end());
  return {std::move(out), n * n};
}

double ecdf(const SampleSet& s, double r) {
  const auto it =
      std::upper_bound(s.distances.begin(), s.distances.end(), r);
  return static_cast<double>(it - s.distances.begin()) /
         static_cast<double>(s.n_pairs);
}

std::vector<HistogramBin> histogram_pdf(const SampleSet& s, int bins) {
  if (bins < 2) throw InvalidInputError("histogram needs at least 2 bins");
  if (s.distances.empty()) throw InvalidInputError("empty sample set");
  const double lo = s.distances.front();
  const double hi = s.distances.back();
  const double span = hi - lo;
  if (span == 0.0) {
    // All distances equal: one occupied bin, Dirac-like density.
    return {{lo, std::numeric_limits<double>::infinity()}};
  }
  const double width = span / bins;
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (const double d : s.distances) {
    auto idx = static_cast<std::size_t>((d - lo) / width);
    idx = std::min(idx, static_cast<std::size_t>(bins - 1));
    ++counts[idx];
  }
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  const double denom = static_cast<double>(s.n_pairs) * width;
  for (int i = 0; i < bins; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = {lo + (i + 0.5) * width,
                static_cast<double>(counts[idx]) / denom};
  }
  return out;
}

KsResult ks_statistic(const SampleSet& s, std::span<const CdfPoint> cdf) {
  if (cdf.empty()) throw InvalidInputError("empty reference cdf");
  for (std::size_t i = 0; i + 1 < cdf.size(); ++i) {
    if (cdf[i + 1].r < cdf[i].r || cdf[i + 1].F < cdf[i].F) {
      throw InvalidInputError("reference cdf must be monotone");
    }
  }

  KsResult res;
  const double n = static_cast<double>(s.n_pairs);
  std::size_t g = 0;  // grid pointer (samples are ascending)
  std::size_t i = 0;
  while (i < s.distances.size()) {
    const double x = s.distances[i];
    std::size_t j = i;
    while (j < s.distances.size() && s.distances[j] == x) ++j;

    double F;
    if (x < cdf.front().r) {
      F = 0.0;
      res.extrapolated = true;
    } else if (x > cdf.back().r) {
      F = 1.0;
      res.extrapolated = true;
    } else {
      while (g + 1 < cdf.size() && cdf[g + 1].r < x) ++g;
      const CdfPoint& p0 = cdf[g];
      const CdfPoint& p1 = cdf[std::min(g + 1, cdf.size() - 1)];
      const double dr = p1.r - p0.r;
      F = dr > 0 ? p0.F + (p1.F - p0.F) * (x - p0.r) / dr : p0.F;
    }
    const double lo = static_cast<double>(i) / n;   // ECDF just below x
    const double hi = static_cast<double>(j) / n;   // ECDF at x
    res.statistic =
        std::max(res.statistic, std::max(std::fabs(F - lo), std::fabs(F - hi)));
    i = j;
  }
  return res;
}

}  // namespace polydist
