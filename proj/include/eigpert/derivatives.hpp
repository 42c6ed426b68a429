// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef EIGPERT_DERIVATIVES_HPP
#define EIGPERT_DERIVATIVES_HPP

#include "eigpert/spectral.hpp"

namespace eigpert {

/// lambda'(tau0) = y0^* A'(tau0) x0.
cxd lambda_derivative(const EigenTriple& t, const Mat& aprime);

/// lambda'(tau0) = tr(Pi0 A'(tau0)); algebraically equal to the bilinear form.
cxd lambda_derivative_trace(const Mat& pi0, const Mat& aprime);

/// x'(tau0) = -S A' x0, plus the row functional (y^*)'(tau0) = -y0^* A' S.
/// The left derivative is stored as the conjugated row entries, i.e. the
/// column z with z^* = (y^*)'(tau0). Only y(tau)^* is analytic in tau, so z
/// is the value of a row functional, not the derivative of y(tau).
struct EigvecDerivatives {
  Vec x_prime;
  Vec ystar_prime; // z with z^* = (y^*)'(tau0)
};
EigvecDerivatives eigenvector_derivatives(const SpectralStructure& ss,
                                          const Mat& aprime);

/// Pi'(tau0) = -Pi0 A' S - S A' Pi0.
Mat projector_derivative(const SpectralStructure& ss, const Mat& aprime);

/// All first-order quantities from one structure (single consistent x0, y0).
struct SensitivityReport {
  cxd lambda_prime;
  cxd lambda_prime_trace_form;
  Vec x_prime;
  Vec ystar_prime;
  Mat pi_prime;
  double bound_rhs = 0.0;          // kappa(X) ||(lambda0 I-B1)^{-1}|| ||A'||
  double bound_rhs_gap_form = 0.0; // kappa(X) ||A'|| / gap
  double chi_times_norm_aprime = 0.0;
};
SensitivityReport sensitivity_report(const SpectralStructure& ss,
                                     const Mat& aprime);

} // namespace eigpert

#endif
