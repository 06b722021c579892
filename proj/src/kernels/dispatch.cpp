// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "polydist/kernels.hpp"

namespace polydist::kernels {

const KernelSet& active_kernels() {
  static const KernelSet& chosen = []() -> const KernelSet& {
    if (const char* env = std::getenv("POLYDIST_KERNELS")) {
      const std::string_view want(env);
      if (want == "scalar") return scalar_kernels();
      if (want == "avx2") {
        if (const KernelSet* v = avx2_kernels()) return *v;
        return scalar_kernels();  // forced variant unavailable
      }
    }
    if (const KernelSet* v = avx2_kernels()) return *v;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace polydist::kernels
