// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/kernels.hpp"

namespace eigpert::kern {

namespace {
constexpr std::size_t kParallelThreshold = 1u << 15; // ~32^3 element-ops
}

std::size_t parallel_threshold() { return kParallelThreshold; }

void gemm_serial(const cxd* a, const cxd* b, cxd* c, std::size_t r,
                 std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < r; ++i) {
    cxd* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = cxd{0.0, 0.0};
    const cxd* ai = a + i * k;
    for (std::size_t l = 0; l < k; ++l) {
      const cxd ail = ai[l];
      const cxd* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void gemm_omp(const cxd* a, const cxd* b, cxd* c, std::size_t r, std::size_t k,
              std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(r); ++i) {
    cxd* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = cxd{0.0, 0.0};
    const cxd* ai = a + i * k;
    for (std::size_t l = 0; l < k; ++l) {
      const cxd ail = ai[l];
      const cxd* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void gemm(const cxd* a, const cxd* b, cxd* c, std::size_t r, std::size_t k,
          std::size_t n) {
  if (r * k * n >= kParallelThreshold)
    gemm_omp(a, b, c, r, k, n);
  else
    gemm_serial(a, b, c, r, k, n);
}

void gemv_serial(const cxd* a, const cxd* x, cxd* y, std::size_t r,
                 std::size_t c) {
  for (std::size_t i = 0; i < r; ++i) {
    cxd acc{0.0, 0.0};
    const cxd* ai = a + i * c;
    for (std::size_t j = 0; j < c; ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
}

void gemv_omp(const cxd* a, const cxd* x, cxd* y, std::size_t r,
              std::size_t c) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(r); ++i) {
    cxd acc{0.0, 0.0};
    const cxd* ai = a + i * c;
    for (std::size_t j = 0; j < c; ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
}

void gemv(const cxd* a, const cxd* x, cxd* y, std::size_t r, std::size_t c) {
  if (r * c >= kParallelThreshold)
    gemv_omp(a, x, y, r, c);
  else
    gemv_serial(a, x, y, r, c);
}

} // namespace eigpert::kern
