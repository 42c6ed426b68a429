// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/derivatives.hpp"

#include "eigpert/dense_backend.hpp"

namespace eigpert {

cxd lambda_derivative(const EigenTriple& t, const Mat& aprime) {
  if (aprime.rows() != t.x0.size() || !aprime.square())
    raise(ErrorClass::DimensionMismatch, "lambda_derivative");
  return dot(t.y0, aprime * t.x0);
}

cxd lambda_derivative_trace(const Mat& pi0, const Mat& aprime) {
  require_same_shape(pi0, aprime, "lambda_derivative_trace");
  require_square(pi0, "lambda_derivative_trace");
  // tr(Pi0 A') without forming the product.
  cxd acc{0.0, 0.0};
  for (std::size_t i = 0; i < pi0.rows(); ++i)
    for (std::size_t k = 0; k < pi0.cols(); ++k)
      acc += pi0(i, k) * aprime(k, i);
  return acc;
}

EigvecDerivatives eigenvector_derivatives(const SpectralStructure& ss,
                                          const Mat& aprime) {
  require_same_shape(ss.s, aprime, "eigenvector_derivatives");
  EigvecDerivatives d;
  d.x_prime = cxd{-1.0, 0.0} * (ss.s * (aprime * ss.triple.x0));
  Vec row = left_apply(left_apply(conj(ss.triple.y0), aprime), ss.s);
  d.ystar_prime = cxd{-1.0, 0.0} * conj(row);
  return d;
}

Mat projector_derivative(const SpectralStructure& ss, const Mat& aprime) {
  require_same_shape(ss.s, aprime, "projector_derivative");
  Mat r = ss.pi0 * (aprime * ss.s);
  r += ss.s * (aprime * ss.pi0);
  r *= cxd{-1.0, 0.0};
  return r;
}

SensitivityReport sensitivity_report(const SpectralStructure& ss,
                                     const Mat& aprime) {
  SensitivityReport r;
  r.lambda_prime = lambda_derivative(ss.triple, aprime);
  r.lambda_prime_trace_form = lambda_derivative_trace(ss.pi0, aprime);
  EigvecDerivatives d = eigenvector_derivatives(ss, aprime);
  r.x_prime = std::move(d.x_prime);
  r.ystar_prime = std::move(d.ystar_prime);
  r.pi_prime = projector_derivative(ss, aprime);
  DerivativeBound b = derivative_bound(ss, aprime);
  r.bound_rhs = b.value;
  r.bound_rhs_gap_form = b.gap_form;
  r.chi_times_norm_aprime = ss.triple.chi * two_norm(aprime);
  return r;
}

} // namespace eigpert
