// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/eigentriple.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eigpert {

std::size_t EigenSelector::pick(const std::vector<cxd>& eigenvalues) const {
  if (eigenvalues.empty())
    raise(ErrorClass::InvalidArgument, "selector over empty spectrum");
  switch (mode) {
    case Mode::ClosestTo: {
      std::size_t best = 0;
      double bd = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        double d = std::abs(eigenvalues[i] - target);
        if (d < bd) {
          bd = d;
          best = i;
        }
      }
      return best;
    }
    case Mode::LargestReal: {
      std::size_t best = 0;
      for (std::size_t i = 1; i < eigenvalues.size(); ++i)
        if (eigenvalues[i].real() > eigenvalues[best].real()) best = i;
      return best;
    }
    case Mode::LargestModulus: {
      std::size_t best = 0;
      for (std::size_t i = 1; i < eigenvalues.size(); ++i)
        if (std::abs(eigenvalues[i]) > std::abs(eigenvalues[best])) best = i;
      return best;
    }
    case Mode::Index:
      if (index >= eigenvalues.size())
        raise(ErrorClass::InvalidArgument, "selector index out of range");
      return index;
  }
  raise(ErrorClass::InvalidArgument, "unknown selector mode");
}

EigenTriple extract_triple(const Mat& a, const EigenSelector& sel,
                           double simplicity_tol) {
  return extract_triple_from(a, eig_dense(a), sel, simplicity_tol);
}

EigenTriple extract_triple_from(const Mat& a, const EigenDecomposition& right,
                                const EigenSelector& sel,
                                double simplicity_tol) {
  if (simplicity_tol <= 0.0)
    raise(ErrorClass::InvalidArgument, "simplicity_tol must be positive");
  const std::size_t n = a.rows();
  const std::size_t k = sel.pick(right.eigenvalues);
  const cxd lambda0 = right.eigenvalues[k];

  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) gap = std::min(gap, std::abs(right.eigenvalues[i] - lambda0));

  const double scale = std::max(two_norm(a), std::numeric_limits<double>::min());
  if (n > 1 && gap <= simplicity_tol * scale)
    raise(ErrorClass::NotSimple,
          "gap " + std::to_string(gap) + " below simplicity tolerance " +
              std::to_string(simplicity_tol * scale));

  // Right vector, phase-canonicalized: max-modulus entry real positive.
  Vec x = right.right_vectors.col(k);
  x *= cxd{1.0 / norm(x), 0.0};
  {
    const cxd piv = x[argmax_modulus(x)];
    x *= std::abs(piv) / piv;
  }

  // Left vector: right eigenvector of A^* paired with conj(lambda0). The
  // pairing must be unique within gap/2.
  EigenDecomposition left = eig_dense(a.adjoint());
  const cxd target = std::conj(lambda0);
  std::size_t match = n;
  std::size_t within = 0;
  double best_d = std::numeric_limits<double>::infinity();
  const double radius = n > 1 ? gap / 2.0 : std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double d = std::abs(left.eigenvalues[i] - target);
    if (d <= radius) ++within;
    if (d < best_d) {
      best_d = d;
      match = i;
    }
  }
  if (within != 1)
    raise(ErrorClass::PairingAmbiguous,
          std::to_string(within) +
              " left eigenvalues inside the pairing radius");
  Vec y = left.right_vectors.col(match);

  const cxd product = dot(y, x); // y^* x before scaling
  if (std::abs(product) < 1e-12 * norm(x) * norm(y))
    raise(ErrorClass::NearOrthogonalPair,
          "|y*x| = " + std::to_string(std::abs(product)) +
              " signals a (nearly) defective eigenvalue");
  // y / conj(product) makes y^* x exactly 1 in exact arithmetic.
  y *= cxd{1.0, 0.0} / std::conj(product);

  EigenTriple t;
  t.lambda0 = lambda0;
  t.x0 = std::move(x);
  t.y0 = std::move(y);
  t.gap = gap;
  t.chi = norm(t.x0) * norm(t.y0);
  t.right_residual = norm(a * t.x0 - lambda0 * t.x0);
  {
    Vec ystar = conj(t.y0); // row entries of y0^*
    Vec row = left_apply(ystar, a);
    row -= lambda0 * ystar;
    t.left_residual = norm(row);
  }
  return t;
}

double condition_number(const EigenTriple& t) { return t.chi; }

} // namespace eigpert
