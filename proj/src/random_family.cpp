// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/random_family.hpp"

#include <cmath>

#include "eigpert/dense_backend.hpp"

namespace eigpert {

std::uint64_t GaussianStream::next_raw() {
  // splitmix64 step keeps distinct seeds decorrelated before the twister.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double GaussianStream::uniform() {
  // Top 53 bits -> (0, 1); never returns 0.
  const std::uint64_t bits = next_raw() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double GaussianStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Mat random_gaussian_matrix(GaussianStream& g, std::size_t n) {
  Mat m(n, n);
  const double s = std::sqrt(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = cxd{s * g.normal(), s * g.normal()};
  return m;
}

Mat random_unit_norm_matrix(GaussianStream& g, std::size_t n) {
  Mat m = random_gaussian_matrix(g, n);
  m *= cxd{1.0 / two_norm(m), 0.0};
  return m;
}

Mat random_hermitian_unit_norm(GaussianStream& g, std::size_t n) {
  Mat m = random_gaussian_matrix(g, n);
  Mat h = m.adjoint();
  h += m;
  h *= cxd{0.5, 0.0};
  h *= cxd{1.0 / two_norm(h), 0.0};
  return h;
}

MatrixFamily random_linear_family(std::uint64_t seed, std::size_t n) {
  GaussianStream g(seed);
  Mat a0 = random_unit_norm_matrix(g, n);
  Mat da = random_unit_norm_matrix(g, n);
  return MatrixFamily::linear(std::move(a0), std::move(da));
}

MatrixFamily random_hermitian_linear_family(std::uint64_t seed,
                                            std::size_t n) {
  GaussianStream g(seed);
  Mat a0 = random_hermitian_unit_norm(g, n);
  Mat da = random_hermitian_unit_norm(g, n);
  return MatrixFamily::linear(std::move(a0), std::move(da));
}

} // namespace eigpert
