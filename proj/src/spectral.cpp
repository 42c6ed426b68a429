// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/spectral.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace eigpert {

namespace {

// Solve M^T v = rhs for lower-triangular M^T, where M = lambda0 I - T22 is
// upper triangular. Forward substitution; diag(M) are the shifted Ritz values
// whose moduli are bounded below by the spectral gap.
Vec solve_transposed_upper(const Mat& m, const Vec& rhs, double pivot_tol) {
  const std::size_t n = m.rows();
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    cxd acc = rhs[i];
    for (std::size_t j = 0; j < i; ++j) acc -= m(j, i) * v[j];
    const cxd piv = m(i, i);
    if (std::abs(piv) <= pivot_tol)
      raise(ErrorClass::SingularDecoupling,
            "lambda0 I - T22 singular to tolerance (pivot " +
                std::to_string(std::abs(piv)) + "); eigenvalue not simple");
    v[i] = acc / piv;
  }
  return v;
}

// Solve (B1 - lambda0 I) Z = R by back substitution, R (n-1) x n.
Mat solve_upper_multi(const Mat& u, const Mat& r, double pivot_tol) {
  const std::size_t m = u.rows();
  Mat z(m, r.cols());
  for (std::size_t col = 0; col < r.cols(); ++col) {
    for (std::size_t ii = m; ii-- > 0;) {
      cxd acc = r(ii, col);
      for (std::size_t j = ii + 1; j < m; ++j) acc -= u(ii, j) * z(j, col);
      const cxd piv = u(ii, ii);
      if (std::abs(piv) <= pivot_tol)
        raise(ErrorClass::SingularDecoupling,
              "B1 - lambda0 I singular to tolerance; eigenvalue not simple");
      z(ii, col) = acc / piv;
    }
  }
  return z;
}

} // namespace

SpectralStructure build_structure(const Mat& a, const EigenTriple& t) {
  require_square(a, "build_structure");
  const std::size_t n = a.rows();
  if (t.x0.size() != n)
    raise(ErrorClass::DimensionMismatch, "triple dimension != matrix");

  SpectralStructure ss;
  ss.triple = t;
  ss.pi0 = outer(t.x0, t.y0);
  ss.pi1 = Mat::identity(n) - ss.pi0;

  if (n == 1) {
    // Nothing besides lambda0: empty complement, S = 0.
    ss.x1 = Mat(1, 0);
    ss.y1 = Mat(1, 0);
    ss.b1 = Mat(0, 0);
    ss.s = Mat(1, 1);
    ss.kappa_x = 1.0;
    ss.resolvent_norm = 0.0;
    return ss;
  }

  const double scale = std::max(two_norm(a), std::numeric_limits<double>::min());

  // Schur form with lambda0 fronted: T = [[~lambda0, t*], [0, T22]].
  SchurDecomposition sd = schur_dense(a);
  const double match_radius =
      std::isfinite(t.gap) ? t.gap / 2.0 : std::numeric_limits<double>::infinity();
  schur_move_to_front(sd, t.lambda0, match_radius);

  const std::size_t m = n - 1;
  Mat t22 = sd.t.block(1, 1, m, m);
  Vec t_row(m); // t* entries: first row of T past the corner
  for (std::size_t j = 0; j < m; ++j) t_row[j] = sd.t(0, j + 1);

  // Decoupling row vector v solving v (lambda0 I - T22) = -t*.
  Mat shifted(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      shifted(i, j) = (i == j ? t.lambda0 : cxd{0.0, 0.0}) - t22(i, j);
  const double pivot_tol =
      n * std::numeric_limits<double>::epsilon() * scale;
  Vec rhs(m);
  for (std::size_t j = 0; j < m; ++j) rhs[j] = -t_row[j];
  Vec v = solve_transposed_upper(shifted, rhs, pivot_tol);

  // X1 = Q_{2..n} + Q_1 v ; Y1 = Q_{2..n}. First columns come from the
  // triple so every derivative downstream shares one (x0, y0) pair.
  Vec q0 = sd.q.col(0);
  ss.x1 = Mat(n, m);
  ss.y1 = Mat(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const cxd qij = sd.q(i, j + 1);
      ss.x1(i, j) = qij + v[j] * q0[i];
      ss.y1(i, j) = qij;
    }
  }
  ss.b1 = std::move(t22);

  // S = X1 (B1 - lambda0 I)^{-1} Y1^*.
  Mat b_shift(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      b_shift(i, j) = ss.b1(i, j) - (i == j ? t.lambda0 : cxd{0.0, 0.0});
  Mat z = solve_upper_multi(b_shift, ss.y1.adjoint(), pivot_tol);
  ss.s = ss.x1 * z;

  // Condition scalars. ||M^{-1}||_2 = 1/sigma_min(M).
  Mat x_full(n, n), y_full(n, n);
  x_full.set_col(0, t.x0);
  y_full.set_col(0, t.y0);
  for (std::size_t j = 0; j < m; ++j) {
    x_full.set_col(j + 1, ss.x1.col(j));
    y_full.set_col(j + 1, ss.y1.col(j));
  }
  ss.kappa_x = two_norm(x_full) * two_norm(y_full);
  const double smin = smallest_singular_value(b_shift);
  ss.resolvent_norm = smin > 0.0 ? 1.0 / smin
                                 : std::numeric_limits<double>::infinity();
  return ss;
}

const Mat& group_inverse(const SpectralStructure& ss) { return ss.s; }

DerivativeBound derivative_bound(const SpectralStructure& ss,
                                 const Mat& aprime) {
  require_same_shape(ss.pi0, aprime, "derivative_bound");
  DerivativeBound b;
  const double na = two_norm(aprime);
  b.value = ss.kappa_x * ss.resolvent_norm * na;
  b.gap_form = std::isfinite(ss.triple.gap) && ss.triple.gap > 0.0
                   ? ss.kappa_x * na / ss.triple.gap
                   : 0.0;
  return b;
}

} // namespace eigpert
