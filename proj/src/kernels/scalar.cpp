// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// Scalar reference kernels. Compiled with -ffp-contract=off so the AVX2
// variants (plain mul/add/sqrt, no FMA) produce bit-identical results.

#include <cmath>

#include "polydist/kernels.hpp"

namespace polydist::kernels {
namespace {

void cross_distances_scalar(const double* ax, const double* ay,
                            std::size_t na, const double* bx,
                            const double* by, std::size_t nb, double* out) {
  for (std::size_t i = 0; i < na; ++i) {
    const double xa = ax[i];
    const double ya = ay[i];
    double* row = out + i * nb;
    for (std::size_t j = 0; j < nb; ++j) {
      const double dx = xa - bx[j];
      const double dy = ya - by[j];
      row[j] = std::sqrt(dx * dx + dy * dy);
    }
  }
}

void box_overlap_scalar(double qminx, double qminy, double qmaxx, double qmaxy,
                        const double* minx, const double* miny,
                        const double* maxx, const double* maxy, std::size_t n,
                        unsigned char* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<unsigned char>(minx[i] <= qmaxx && maxx[i] >= qminx &&
                                        miny[i] <= qmaxy && maxy[i] >= qminy);
  }
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{cross_distances_scalar, box_overlap_scalar,
                             "scalar"};
  return set;
}

}  // namespace polydist::kernels
