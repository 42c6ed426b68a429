// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0
//
// Dense eigensolver / Schur / linear-solve contracts. Backed by LAPACK
// (zgeev, zgees, ztrexc, zgetrf/zgetrs, zgesvd); everything above this header
// depends only on the contracts, not on the backend.

#ifndef EIGPERT_DENSE_BACKEND_HPP
#define EIGPERT_DENSE_BACKEND_HPP

#include <vector>

#include "eigpert/types.hpp"

namespace eigpert {

struct EigenDecomposition {
  std::vector<cxd> eigenvalues;  // length n, no guaranteed order
  Mat right_vectors;             // n x n, column k pairs with eigenvalue k, unit 2-norm
  double residual_bound = 0.0;   // max_k ||A v_k - w_k v_k|| / (||A|| ||v_k||)
};

/// Full spectrum with unit-norm right eigenvectors.
EigenDecomposition eig_dense(const Mat& a);

struct SchurDecomposition {
  Mat q; // unitary
  Mat t; // upper triangular, a = q t q^*
};

SchurDecomposition schur_dense(const Mat& a);

/// Move the diagonal entry of t closest to `target` into position (0,0) by
/// unitary swaps of adjacent entries. The nearest entry must be within
/// `match_radius` of the target or ReorderFailure is thrown.
void schur_move_to_front(SchurDecomposition& s, cxd target,
                         double match_radius);

/// X with A X = B via LU with partial pivoting. Throws SingularToTolerance
/// (message carries the offending pivot magnitude) when a pivot falls below
/// pivot_rel_tol * max|A|; pivot_rel_tol <= 0 selects the default
/// n * eps.
Mat solve_dense(const Mat& a, const Mat& b, double pivot_rel_tol = 0.0);
Vec solve_dense(const Mat& a, const Vec& b, double pivot_rel_tol = 0.0);

/// Singular values in descending order.
std::vector<double> singular_values(const Mat& a);
/// Spectral norm sigma_max; 0 for an empty matrix.
double two_norm(const Mat& a);
/// sigma_min; 0 for an empty matrix.
double smallest_singular_value(const Mat& a);

} // namespace eigpert

#endif
