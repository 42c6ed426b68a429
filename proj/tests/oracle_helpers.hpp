// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles and matchers. The brute-force spectral construction here
// goes through the full eigendecomposition plus an LU inverse, so it stays
// independent of the Schur-based production route it cross-checks.

#ifndef EIGPERT_TESTS_ORACLE_HELPERS_HPP
#define EIGPERT_TESTS_ORACLE_HELPERS_HPP

#include <doctest.h>

#include <complex>

#include "eigpert/dense_backend.hpp"
#include "eigpert/eigentriple.hpp"
#include "eigpert/random_family.hpp"

namespace oracle {

using eigpert::cxd;
using eigpert::Mat;
using eigpert::Vec;

inline void check_close(cxd a, cxd b, double tol) {
  CHECK(std::abs(a - b) <= tol);
}

inline void check_vec_close(const Vec& a, const Vec& b, double tol) {
  REQUIRE(a.size() == b.size());
  CHECK(eigpert::norm(a - b) <= tol);
}

inline void check_mat_close(const Mat& a, const Mat& b, double tol) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  CHECK(eigpert::frobenius_norm(a - b) <= tol);
}

struct BruteForceStructure {
  cxd lambda0;
  Mat pi0;
  Mat s;
};

/// Pi0 and the group inverse from the full eigendecomposition of a
/// diagonalizable matrix: rows of V^{-1} are the y_j^* functionals, so
/// Pi0 = v_k w_k^T and S = sum_{j != k} v_j w_j^T / (lambda_j - lambda_k).
inline BruteForceStructure brute_force_structure(
    const Mat& a, const eigpert::EigenSelector& sel) {
  const auto ed = eigpert::eig_dense(a);
  const std::size_t n = a.rows();
  const std::size_t k = sel.pick(ed.eigenvalues);
  const Mat w = eigpert::solve_dense(ed.right_vectors, Mat::identity(n));

  BruteForceStructure r;
  r.lambda0 = ed.eigenvalues[k];
  r.pi0 = Mat(n, n);
  r.s = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.pi0(i, j) = ed.right_vectors(i, k) * w(k, j);
      cxd acc{0.0, 0.0};
      for (std::size_t m = 0; m < n; ++m) {
        if (m == k) continue;
        acc += ed.right_vectors(i, m) * w(m, j) /
               (ed.eigenvalues[m] - r.lambda0);
      }
      r.s(i, j) = acc;
    }
  return r;
}

/// Random matrix with a deterministic seed, normalized to unit 2-norm.
inline Mat seeded_matrix(std::uint64_t seed, std::size_t n) {
  eigpert::GaussianStream g(seed);
  return eigpert::random_unit_norm_matrix(g, n);
}

inline cxd one() { return cxd{1.0, 0.0}; }

} // namespace oracle

#endif
