// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner-loop kernels with a scalar reference implementation
// and an AVX2 variant selected at runtime. Both variants use the same
// operation order (multiply/add/sqrt, no FMA contraction), so their outputs
// are bit-identical; the test suite asserts this equivalence.

#pragma once

#include <cstddef>

namespace polydist::kernels {

// out[i * nb + j] = euclidean distance between (ax[i], ay[i]) and
// (bx[j], by[j]). Inputs must be finite; out must hold na * nb doubles.
using CrossDistancesFn = void (*)(const double* ax, const double* ay,
                                  std::size_t na, const double* bx,
                                  const double* by, std::size_t nb,
                                  double* out);

// out[i] = 1 when box i = [minx[i], maxx[i]] x [miny[i], maxy[i]] overlaps
// the query box (closed intervals, touching counts), else 0.
using BoxOverlapFn = void (*)(double qminx, double qminy, double qmaxx,
                              double qmaxy, const double* minx,
                              const double* miny, const double* maxx,
                              const double* maxy, std::size_t n,
                              unsigned char* out);

struct KernelSet {
  CrossDistancesFn cross_distances;
  BoxOverlapFn box_overlap;
  const char* name;
};

// Scalar reference kernels; always available.
const KernelSet& scalar_kernels();

// AVX2 kernels, or nullptr when the build target or the running CPU does
// not support AVX2.
const KernelSet* avx2_kernels();

// The preferred kernel set for this process. Honors POLYDIST_KERNELS=scalar
// or POLYDIST_KERNELS=avx2 in the environment (falls back to scalar when a
// forced variant is unavailable). The choice is made once and cached.
const KernelSet& active_kernels();

}  // namespace polydist::kernels
