// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0
//
// Eigenvector normalization schemes and derivative transport.
//
//   N0    projector-based analytic normalization (the renormalization of
//         computed vectors is normalize0_computed)
//   N1    pinned entries: e_j^T xhat = 1 and e_k^T yhat = 1
//   N2    e_j^T xhat = 1 and yhat^* xhat = 1
//   N3    xhat^T xhat = 1 and yhat^* xhat = 1 (sign choice required)
//   N4_RP unit norms with yhat^* xhat real positive; well defined but not
//         unique, so it carries no derivative.

#ifndef EIGPERT_NORMALIZATION_HPP
#define EIGPERT_NORMALIZATION_HPP

#include <optional>
#include <utility>

#include "eigpert/spectral.hpp"

namespace eigpert {

enum class SchemeKind { N0, N1, N2, N3, N4RP };

const char* scheme_name(SchemeKind k);

struct NormalizationScheme {
  SchemeKind kind = SchemeKind::N0;
  std::optional<int> index_j;     // 1-based; default: max-modulus entry of x0
  std::optional<int> index_k;     // 1-based; default: max-modulus entry of y0
  std::optional<int> sign_choice; // +1/-1 for N3; default from x0's phase
};

struct NormalizedPair {
  Vec x_hat;
  Vec y_hat;
  std::optional<Vec> x_hat_prime;
  std::optional<Vec> y_hat_star_prime; // z with z^* = (yhat^*)'(tau0)
  cxd alpha0{1.0, 0.0};
  std::optional<cxd> alpha_prime0;
  cxd beta_star0{1.0, 0.0};
  std::optional<cxd> beta_star_prime0;
  bool well_defined = true;
  bool unique = true;
  int used_j = 0; // 1-based indices actually used (0 = unused)
  int used_k = 0;
  int used_sign = 0;
};

/// Renormalize computed eigenvectors (x_t, y_t) of A(tau), with
/// y_t^* x_t = 1, onto the analytic normalization-0 branch through (x0, y0):
///   x := (y_t^* x0 / y0^* x_t)^{1/2} x_t,
///   y := (x_t^* y0 / x0^* y_t)^{1/2} y_t,
/// using principal square roots. Throws BranchCutViolation when an argument
/// comes within the guard band of the nonpositive real axis, which signals
/// tau too far from tau0.
NormalizedPair normalize0_computed(const Vec& x_t, const Vec& y_t,
                                   const Vec& x0, const Vec& y0);

/// Build the hatted pair at tau0 for a scheme plus the transported
/// derivatives  xhat' = alpha0 x' + alpha0' x0,
///             (yhat^*)' = beta*0 (y^*)' + beta*0' y0^*.
NormalizedPair apply_normalization(const NormalizationScheme& scheme,
                                   const SpectralStructure& ss,
                                   const Vec& x_prime, const Vec& ystar_prime);

/// Max-modulus pin indices (1-based), ties to the lowest index.
std::pair<int, int> default_indices(const Vec& x0, const Vec& y0);

/// Sign (+1/-1) aligning x_hat_tau with the reference at pinned entry j
/// (1-based): real parts matched, imaginary parts as fallback when the
/// reference entry is (nearly) purely imaginary.
int sign_consistency(const Vec& x_hat_tau, const Vec& x_hat_ref, int j);

} // namespace eigpert

#endif
