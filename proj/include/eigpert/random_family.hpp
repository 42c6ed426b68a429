// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0
//
// Reproducible random test matrices. The generator is pinned so reports and
// acceptance runs are identical across platforms with the same libm:
// a splitmix64 stream, uniforms from the top 53 bits, normals via
// Box-Muller, matrices normalized to unit spectral norm.

#ifndef EIGPERT_RANDOM_FAMILY_HPP
#define EIGPERT_RANDOM_FAMILY_HPP

#include <cstdint>

#include "eigpert/family.hpp"

namespace eigpert {

class GaussianStream {
public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed) {}
  double uniform();  // in (0, 1)
  double normal();   // standard normal

private:
  std::uint64_t next_raw();
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Entries (re, im) iid N(0, 1/2) so E|a_ij|^2 = 1; no normalization.
Mat random_gaussian_matrix(GaussianStream& g, std::size_t n);

/// Gaussian matrix scaled to unit spectral norm.
Mat random_unit_norm_matrix(GaussianStream& g, std::size_t n);

/// Hermitian (G + G^*)/2, scaled to unit spectral norm.
Mat random_hermitian_unit_norm(GaussianStream& g, std::size_t n);

/// Linear family A0 + tau * DeltaA with ||A0|| = ||DeltaA|| = 1, tau0 = 0.
MatrixFamily random_linear_family(std::uint64_t seed, std::size_t n);

MatrixFamily random_hermitian_linear_family(std::uint64_t seed, std::size_t n);

} // namespace eigpert

#endif
