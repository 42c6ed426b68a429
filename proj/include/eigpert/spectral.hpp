// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef EIGPERT_SPECTRAL_HPP
#define EIGPERT_SPECTRAL_HPP

#include "eigpert/eigentriple.hpp"
#include "eigpert/types.hpp"

namespace eigpert {

/// Block decomposition around a simple eigenvalue: with X = [x0, X1] and
/// Y = [y0, Y1], Y^* X = I and Y^* A X = diag(lambda0, B1). S is the group
/// inverse (reduced resolvent) of A - lambda0 I; Pi0 = x0 y0^* the
/// eigenprojector; Pi1 = I - Pi0 its complement.
///
/// X1, Y1, B1 are canonicalized through the Schur route and are not unique;
/// only S, Pi0, Pi1 and the norm scalars are contractually stable.
struct SpectralStructure {
  EigenTriple triple;
  Mat x1; // n x (n-1)
  Mat y1; // n x (n-1)
  Mat b1; // (n-1) x (n-1), upper triangular
  Mat s;  // n x n
  Mat pi0;
  Mat pi1;
  double kappa_x = 1.0;         // ||X||_2 ||Y||_2
  double resolvent_norm = 0.0;  // ||(lambda0 I - B1)^{-1}||_2
};

SpectralStructure build_structure(const Mat& a, const EigenTriple& t);

const Mat& group_inverse(const SpectralStructure& ss);

struct DerivativeBound {
  double value = 0.0;    // kappa(X) ||(lambda0 I - B1)^{-1}|| ||A'||
  double gap_form = 0.0; // kappa(X) ||A'|| / gap
};

DerivativeBound derivative_bound(const SpectralStructure& ss,
                                 const Mat& aprime);

} // namespace eigpert

#endif
