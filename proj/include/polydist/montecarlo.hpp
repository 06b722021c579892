// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// Simulation oracle: uniform sampling in triangles and polygons, empirical
// distance samples, histogram densities, ECDF and the Kolmogorov-Smirnov
// distance against a reference CDF. Deterministic for a fixed seed: the
// generator is SplitMix64 (Steele, Lea & Flood 2014; increment
// 0x9E3779B97F4A7C15, mix constants 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB)
// and uniform doubles are (next() >> 11) * 2^-53.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polydist/distribution.hpp"
#include "polydist/geometry.hpp"

namespace polydist {

struct RandomSeed {
  std::uint64_t value = 1;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  explicit SplitMix64(RandomSeed seed) : state_(seed.value) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Sorted empirical cross distances; distances.size() == n_pairs.
struct SampleSet {
  std::vector<double> distances;
  std::size_t n_pairs = 0;
};

// empirical_distances computes n^2 pairwise distances; this cap keeps the
// buffer (8 * n^2 bytes) within a few GiB.
inline constexpr std::size_t kMaxSamplesPerPolygon = 20000;

// Deterministic core of triangle sampling: u and v are the sorted pair of
// the two given uniforms and the sample is u*a + (v-u)*b + (1-v)*c.
Point sample_triangle_from_uniforms(const Triangle& t, double u1, double u2);

Point sample_triangle(const Triangle& t, SplitMix64& gen);

// Picks a triangle with probability proportional to its area fraction
// (cumulative inversion of one uniform), then samples inside it. `d` must
// decompose `p` (checked by area).
Point sample_polygon(const Polygon& p, const TriangleDecomposition& d,
                     SplitMix64& gen);

// Draws n points in each polygon (all of a first, then all of b, one
// SplitMix64 stream), returns the sorted n^2 cross distances. Bit-identical
// for a fixed seed regardless of `workers`. Throws ResourceLimitError when
// n > kMaxSamplesPerPolygon.
SampleSet empirical_distances(const Polygon& a, const Polygon& b,
                              std::size_t n, RandomSeed seed, int workers = 1);

// Fraction of distances <= r (right-continuous).
double ecdf(const SampleSet& s, double r);

struct HistogramBin {
  double center;
  double density;
};

// Equal-width bins over [min, max]; density = count / (n_pairs * width), so
// the densities integrate to 1. A zero-width sample range degenerates to a
// single bin with infinite density.
std::vector<HistogramBin> histogram_pdf(const SampleSet& s, int bins);

struct KsResult {
  double statistic = 0.0;
  // Set when some sample fell outside the CDF grid and F was clamped to 0/1.
  bool extrapolated = false;
};

// sup over sample points of |ecdf - F|, with F linearly interpolated
// between grid points and both the pre- and post-jump ECDF values checked.
KsResult ks_statistic(const SampleSet& s, std::span<const CdfPoint> cdf);

}  // namespace polydist
