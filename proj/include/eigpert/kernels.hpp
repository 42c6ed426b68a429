// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0
//
// Low-level dense kernels over raw row-major complex arrays. Each kernel has
// a serial reference implementation and an OpenMP variant that partitions
// output rows; both produce bitwise-identical results because every output
// element is accumulated in the same order. The dispatching entry points pick
// the OpenMP path only above a work threshold, so the tiny matrices this
// library mostly handles stay on the serial path.

#ifndef EIGPERT_KERNELS_HPP
#define EIGPERT_KERNELS_HPP

#include <complex>
#include <cstddef>

namespace eigpert::kern {

using cxd = std::complex<double>;

// C (r x c) = A (r x k) * B (k x c)
void gemm_serial(const cxd* a, const cxd* b, cxd* c, std::size_t r,
                 std::size_t k, std::size_t n);
void gemm_omp(const cxd* a, const cxd* b, cxd* c, std::size_t r, std::size_t k,
              std::size_t n);
void gemm(const cxd* a, const cxd* b, cxd* c, std::size_t r, std::size_t k,
          std::size_t n);

// y (r) = A (r x c) * x (c)
void gemv_serial(const cxd* a, const cxd* x, cxd* y, std::size_t r,
                 std::size_t c);
void gemv_omp(const cxd* a, const cxd* x, cxd* y, std::size_t r,
              std::size_t c);
void gemv(const cxd* a, const cxd* x, cxd* y, std::size_t r, std::size_t c);

// Work threshold (element-operations) above which the OpenMP variants engage.
std::size_t parallel_threshold();

} // namespace eigpert::kern

#endif
