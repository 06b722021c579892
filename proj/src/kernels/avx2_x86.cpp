// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernels (4 doubles per lane). Same operation order as the scalar
// reference: sub, mul, add, sqrt — all IEEE correctly rounded, so results
// match the scalar kernels bit for bit.

#include "polydist/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace polydist::kernels {
namespace {

void cross_distances_avx2(const double* ax, const double* ay, std::size_t na,
                          const double* bx, const double* by, std::size_t nb,
                          double* out) {
  const std::size_t nb4 = nb - (nb % 4);
  for (std::size_t i = 0; i < na; ++i) {
    const __m256d xa = _mm256_set1_pd(ax[i]);
    const __m256d ya = _mm256_set1_pd(ay[i]);
    double* row = out + i * nb;
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      const __m256d dx = _mm256_sub_pd(xa, _mm256_loadu_pd(bx + j));
      const __m256d dy = _mm256_sub_pd(ya, _mm256_loadu_pd(by + j));
      const __m256d d2 =
          _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      _mm256_storeu_pd(row + j, _mm256_sqrt_pd(d2));
    }
    for (; j < nb; ++j) {
      const double dx = ax[i] - bx[j];
      const double dy = ay[i] - by[j];
      row[j] = std::sqrt(dx * dx + dy * dy);
    }
  }
}

void box_overlap_avx2(double qminx, double qminy, double qmaxx, double qmaxy,
                      const double* minx, const double* miny,
                      const double* maxx, const double* maxy, std::size_t n,
                      unsigned char* out) {
  const __m256d vqminx = _mm256_set1_pd(qminx);
  const __m256d vqminy = _mm256_set1_pd(qminy);
  const __m256d vqmaxx = _mm256_set1_pd(qmaxx);
  const __m256d vqmaxy = _mm256_set1_pd(qmaxy);
  const std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    const __m256d c0 =
        _mm256_cmp_pd(_mm256_loadu_pd(minx + i), vqmaxx, _CMP_LE_OQ);
    const __m256d c1 =
        _mm256_cmp_pd(_mm256_loadu_pd(maxx + i), vqminx, _CMP_GE_OQ);
    const __m256d c2 =
        _mm256_cmp_pd(_mm256_loadu_pd(miny + i), vqmaxy, _CMP_LE_OQ);
    const __m256d c3 =
        _mm256_cmp_pd(_mm256_loadu_pd(maxy + i), vqminy, _CMP_GE_OQ);
    const __m256d all =
        _mm256_and_pd(_mm256_and_pd(c0, c1), _mm256_and_pd(c2, c3));
    const int mask = _mm256_movemask_pd(all);
    out[i + 0] = static_cast<unsigned char>(mask & 1);
    out[i + 1] = static_cast<unsigned char>((mask >> 1) & 1);
    out[i + 2] = static_cast<unsigned char>((mask >> 2) & 1);
    out[i + 3] = static_cast<unsigned char>((mask >> 3) & 1);
  }
  for (; i < n; ++i) {
    out[i] = static_cast<unsigned char>(minx[i] <= qmaxx && maxx[i] >= qminx &&
                                        miny[i] <= qmaxy && maxy[i] >= qminy);
  }
}

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet set{cross_distances_avx2, box_overlap_avx2, "avx2"};
  static const KernelSet* available =
      __builtin_cpu_supports("avx2") ? &set : nullptr;
  return available;
}

}  // namespace polydist::kernels

#else  // non-x86 target: no AVX2 variant.

namespace polydist::kernels {

const KernelSet* avx2_kernels() { return nullptr; }

}  // namespace polydist::kernels

#endif
