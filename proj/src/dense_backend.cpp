// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/dense_backend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace {

using eigpert::cxd;

extern "C" {
void zgeev_(const char* jobvl, const char* jobvr, const int* n, cxd* a,
            const int* lda, cxd* w, cxd* vl, const int* ldvl, cxd* vr,
            const int* ldvr, cxd* work, const int* lwork, double* rwork,
            int* info);
void zgees_(const char* jobvs, const char* sort, void* select, const int* n,
            cxd* a, const int* lda, int* sdim, cxd* w, cxd* vs,
            const int* ldvs, cxd* work, const int* lwork, double* rwork,
            void* bwork, int* info);
void ztrexc_(const char* compq, const int* n, cxd* t, const int* ldt, cxd* q,
             const int* ldq, const int* ifst, const int* ilst, int* info);
void zgetrf_(const int* m, const int* n, cxd* a, const int* lda, int* ipiv,
             int* info);
void zgetrs_(const char* trans, const int* n, const int* nrhs, const cxd* a,
             const int* lda, const int* ipiv, cxd* b, const int* ldb,
             int* info);
void zgesvd_(const char* jobu, const char* jobvt, const int* m, const int* n,
             cxd* a, const int* lda, double* s, cxd* u, const int* ldu,
             cxd* vt, const int* ldvt, cxd* work, const int* lwork,
             double* rwork, int* info);
}

// LAPACK is column-major; the library stores row-major.
std::vector<cxd> to_colmajor(const eigpert::Mat& m) {
  std::vector<cxd> a(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) a[j * m.rows() + i] = m(i, j);
  return a;
}

eigpert::Mat from_colmajor(const std::vector<cxd>& a, std::size_t rows,
                           std::size_t cols) {
  eigpert::Mat m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = a[j * rows + i];
  return m;
}

} // namespace

namespace eigpert {

EigenDecomposition eig_dense(const Mat& a) {
  require_square(a, "eig_dense requires a square matrix");
  const int n = static_cast<int>(a.rows());
  std::vector<cxd> ac = to_colmajor(a);
  std::vector<cxd> w(n), vr(static_cast<std::size_t>(n) * n);
  std::vector<double> rwork(2 * n);
  int info = 0;

  cxd wk_query;
  int lwork = -1;
  zgeev_("N", "V", &n, ac.data(), &n, w.data(), nullptr, &n, vr.data(), &n,
         &wk_query, &lwork, rwork.data(), &info);
  lwork = static_cast<int>(wk_query.real());
  std::vector<cxd> work(std::max(lwork, 1));
  zgeev_("N", "V", &n, ac.data(), &n, w.data(), nullptr, &n, vr.data(), &n,
         work.data(), &lwork, rwork.data(), &info);
  if (info > 0)
    raise(ErrorClass::NonConvergence, "zgeev failed to converge");
  if (info < 0) raise(ErrorClass::InvalidArgument, "zgeev illegal argument");

  EigenDecomposition d;
  d.eigenvalues = std::move(w);
  d.right_vectors = from_colmajor(vr, a.rows(), a.cols());

  // Normalize columns to unit 2-norm and compute the residual certificate.
  const double norm_a = std::max(frobenius_norm(a),
                                 std::numeric_limits<double>::min());
  double worst = 0.0;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    Vec v = d.right_vectors.col(k);
    double nv = norm(v);
    if (nv > 0.0) v *= cxd{1.0 / nv, 0.0};
    d.right_vectors.set_col(k, v);
    Vec r = a * v - d.eigenvalues[k] * v;
    worst = std::max(worst, norm(r) / norm_a);
  }
  d.residual_bound =
      std::max(worst, std::numeric_limits<double>::epsilon() * a.rows());
  return d;
}

SchurDecomposition schur_dense(const Mat& a) {
  require_square(a, "schur_dense requires a square matrix");
  const int n = static_cast<int>(a.rows());
  std::vector<cxd> ac = to_colmajor(a);
  std::vector<cxd> w(n), vs(static_cast<std::size_t>(n) * n);
  std::vector<double> rwork(n);
  int sdim = 0, info = 0;

  cxd wk_query;
  int lwork = -1;
  zgees_("V", "N", nullptr, &n, ac.data(), &n, &sdim, w.data(), vs.data(), &n,
         &wk_query, &lwork, rwork.data(), nullptr, &info);
  lwork = static_cast<int>(wk_query.real());
  std::vector<cxd> work(std::max(lwork, 1));
  zgees_("V", "N", nullptr, &n, ac.data(), &n, &sdim, w.data(), vs.data(), &n,
         work.data(), &lwork, rwork.data(), nullptr, &info);
  if (info > 0)
    raise(ErrorClass::NonConvergence, "zgees failed to converge");
  if (info < 0) raise(ErrorClass::InvalidArgument, "zgees illegal argument");

  SchurDecomposition s;
  s.t = from_colmajor(ac, a.rows(), a.cols());
  s.q = from_colmajor(vs, a.rows(), a.cols());
  return s;
}

void schur_move_to_front(SchurDecomposition& s, cxd target,
                         double match_radius) {
  const int n = static_cast<int>(s.t.rows());
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.t.rows(); ++i) {
    double d = std::abs(s.t(i, i) - target);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  if (best_d > match_radius)
    raise(ErrorClass::ReorderFailure,
          "no Schur diagonal entry within matching radius of the target");
  if (best == 0) return;

  std::vector<cxd> tc = to_colmajor(s.t);
  std::vector<cxd> qc = to_colmajor(s.q);
  const int ifst = static_cast<int>(best) + 1; // LAPACK is 1-based
  const int ilst = 1;
  int info = 0;
  ztrexc_("V", &n, tc.data(), &n, qc.data(), &n, &ifst, &ilst, &info);
  if (info != 0)
    raise(ErrorClass::ReorderFailure, "ztrexc failed during reordering");
  s.t = from_colmajor(tc, s.t.rows(), s.t.cols());
  s.q = from_colmajor(qc, s.q.rows(), s.q.cols());
  if (std::abs(s.t(0, 0) - target) > match_radius)
    raise(ErrorClass::ReorderFailure,
          "reordered Schur form does not front the target eigenvalue");
}

Mat solve_dense(const Mat& a, const Mat& b, double pivot_rel_tol) {
  require_square(a, "solve_dense requires a square matrix");
  if (a.rows() != b.rows())
    raise(ErrorClass::DimensionMismatch, "solve_dense rhs rows");
  const int n = static_cast<int>(a.rows());
  const int nrhs = static_cast<int>(b.cols());
  if (n == 0) return b;

  std::vector<cxd> ac = to_colmajor(a);
  std::vector<int> ipiv(n);
  int info = 0;
  zgetrf_(&n, &n, ac.data(), &n, ipiv.data(), &info);
  if (info < 0) raise(ErrorClass::InvalidArgument, "zgetrf illegal argument");

  double tol = pivot_rel_tol > 0.0
                   ? pivot_rel_tol
                   : a.rows() * std::numeric_limits<double>::epsilon();
  const double scale = std::max(max_abs(a), std::numeric_limits<double>::min());
  double min_pivot = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    min_pivot = std::min(min_pivot, std::abs(ac[i * n + i]));
  if (info > 0 || min_pivot <= tol * scale)
    raise(ErrorClass::SingularToTolerance,
          "pivot magnitude " + std::to_string(min_pivot) +
              " below tolerance " + std::to_string(tol * scale));

  std::vector<cxd> bc = to_colmajor(b);
  zgetrs_("N", &n, &nrhs, ac.data(), &n, ipiv.data(), bc.data(), &n, &info);
  if (info != 0) raise(ErrorClass::InvalidArgument, "zgetrs failed");
  return from_colmajor(bc, b.rows(), b.cols());
}

Vec solve_dense(const Mat& a, const Vec& b, double pivot_rel_tol) {
  Mat rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return solve_dense(a, rhs, pivot_rel_tol).col(0);
}

std::vector<double> singular_values(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  const int mn = std::min(m, n);
  std::vector<cxd> ac = to_colmajor(a);
  std::vector<double> s(mn), rwork(5 * mn);
  int info = 0;

  cxd wk_query;
  int lwork = -1;
  zgesvd_("N", "N", &m, &n, ac.data(), &m, s.data(), nullptr, &m, nullptr, &n,
          &wk_query, &lwork, rwork.data(), &info);
  lwork = static_cast<int>(wk_query.real());
  std::vector<cxd> work(std::max(lwork, 1));
  zgesvd_("N", "N", &m, &n, ac.data(), &m, s.data(), nullptr, &m, nullptr, &n,
          work.data(), &lwork, rwork.data(), &info);
  if (info != 0) raise(ErrorClass::NonConvergence, "zgesvd failed");
  return s;
}

double two_norm(const Mat& a) {
  auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

double smallest_singular_value(const Mat& a) {
  auto s = singular_values(a);
  return s.empty() ? 0.0 : s.back();
}

} // namespace eigpert
