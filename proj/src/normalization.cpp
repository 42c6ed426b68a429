// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/normalization.hpp"

#include <cmath>
#include <string>

namespace eigpert {

namespace {

constexpr double kBranchGuard = 1e-8;
constexpr double kPinnedTol = 1e-8;
constexpr double kIsotropicTol = 1e-8;

// Distance from the nonpositive real axis, relative to max(1, |z|). The
// principal square root is only trusted outside the guard band.
void check_branch(cxd z, const char* what) {
  const double mod = std::abs(z);
  const double dist = z.real() <= 0.0 ? std::abs(z.imag()) : mod;
  if (dist <= kBranchGuard * std::max(1.0, mod))
    raise(ErrorClass::BranchCutViolation,
          std::string(what) + " square-root argument too close to the cut");
}

int resolve_index(const std::optional<int>& requested, const Vec& v,
                  const char* what) {
  if (!requested) return static_cast<int>(argmax_modulus(v)) + 1;
  const int j = *requested;
  if (j < 1 || static_cast<std::size_t>(j) > v.size())
    raise(ErrorClass::InvalidArgument,
          std::string(what) + " pin index out of range");
  return j;
}

} // namespace

const char* scheme_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::N0: return "n0";
    case SchemeKind::N1: return "n1";
    case SchemeKind::N2: return "n2";
    case SchemeKind::N3: return "n3";
    case SchemeKind::N4RP: return "n4";
  }
  return "?";
}

NormalizedPair normalize0_computed(const Vec& x_t, const Vec& y_t,
                                   const Vec& x0, const Vec& y0) {
  const std::size_t n = x0.size();
  if (x_t.size() != n || y_t.size() != n || y0.size() != n)
    raise(ErrorClass::DimensionMismatch, "normalize0_computed");
  const cxd prod = dot(y_t, x_t);
  if (std::abs(prod - cxd{1.0, 0.0}) >
      1e-6 * std::max(1.0, norm(x_t) * norm(y_t)))
    raise(ErrorClass::InvalidArgument,
          "normalize0_computed expects y_t^* x_t = 1");

  const cxd r1 = dot(y_t, x0) / dot(y0, x_t);
  const cxd r2 = dot(x_t, y0) / dot(x0, y_t);
  check_branch(r1, "right");
  check_branch(r2, "left");
  const cxd sx = std::sqrt(r1);
  const cxd sy = std::sqrt(r2);

  NormalizedPair p;
  p.x_hat = sx * x_t;
  p.y_hat = sy * y_t;
  p.alpha0 = sx;
  p.beta_star0 = std::conj(sy);
  return p;
}

NormalizedPair apply_normalization(const NormalizationScheme& scheme,
                                   const SpectralStructure& ss,
                                   const Vec& x_prime,
                                   const Vec& ystar_prime) {
  const Vec& x0 = ss.triple.x0;
  const Vec& y0 = ss.triple.y0;
  const std::size_t n = x0.size();
  if (x_prime.size() != n || ystar_prime.size() != n)
    raise(ErrorClass::DimensionMismatch, "apply_normalization derivatives");
  NormalizedPair p;
  switch (scheme.kind) {
    case SchemeKind::N0: {
      p.x_hat = x0;
      p.y_hat = y0;
      p.alpha0 = cxd{1.0, 0.0};
      p.beta_star0 = cxd{1.0, 0.0};
      p.alpha_prime0 = cxd{0.0, 0.0};
      p.beta_star_prime0 = cxd{0.0, 0.0};
      p.x_hat_prime = x_prime;
      p.y_hat_star_prime = ystar_prime;
      return p;
    }
    case SchemeKind::N1:
    case SchemeKind::N2: {
      const int j = resolve_index(scheme.index_j, x0, "x");
      const cxd pj = x0[j - 1]; // e_j^T x0
      if (std::abs(pj) < kPinnedTol * norm(x0))
        raise(ErrorClass::PinnedEntryZero,
              "pinned entry j=" + std::to_string(j) + " of x0 is (nearly) 0");
      const cxd alpha0 = cxd{1.0, 0.0} / pj;
      const cxd alpha_prime0 = -x_prime[j - 1] / (pj * pj);

      cxd beta_star0, beta_star_prime0;
      int k_used = 0;
      if (scheme.kind == SchemeKind::N1) {
        const int k = resolve_index(scheme.index_k, y0, "y");
        const cxd qk = std::conj(y0[k - 1]); // y0^* e_k
        if (std::abs(qk) < kPinnedTol * norm(y0))
          raise(ErrorClass::PinnedEntryZero,
                "pinned entry k=" + std::to_string(k) + " of y0 is (nearly) 0");
        beta_star0 = cxd{1.0, 0.0} / qk;
        // (y^*)' e_k is the conjugate of the stored entry.
        beta_star_prime0 = -std::conj(ystar_prime[k - 1]) / (qk * qk);
        k_used = k;
      } else {
        beta_star0 = pj;              // e_j^T x(tau) at tau0
        beta_star_prime0 = x_prime[j - 1];
      }

      p.x_hat = alpha0 * x0;
      p.y_hat = std::conj(beta_star0) * y0;
      p.x_hat_prime = alpha0 * x_prime + alpha_prime0 * x0;
      // Stored as conjugated rows: conj() distributes over the transport.
      p.y_hat_star_prime =
          std::conj(beta_star0) * ystar_prime + std::conj(beta_star_prime0) * y0;
      p.alpha0 = alpha0;
      p.alpha_prime0 = alpha_prime0;
      p.beta_star0 = beta_star0;
      p.beta_star_prime0 = beta_star_prime0;
      p.used_j = j;
      p.used_k = k_used;
      return p;
    }
    case SchemeKind::N3: {
      const cxd t = bilinear(x0, x0);
      const double nx = norm(x0);
      if (std::abs(t) < kIsotropicTol * nx * nx)
        raise(ErrorClass::IsotropicVector,
              "x0^T x0 is (nearly) 0; normalization 3 undefined");
      const cxd s = std::sqrt(t); // principal branch
      const int j = resolve_index(scheme.index_j, x0, "x");

      int sign;
      if (scheme.sign_choice) {
        sign = *scheme.sign_choice >= 0 ? 1 : -1;
      } else {
        // Branch with Re(e_j^T xhat) > 0, matching the triple's phase
        // canonicalization; imaginary part breaks the degenerate case.
        const cxd c = x0[j - 1] / s;
        sign = c.real() > 0.0 ? 1
               : c.real() < 0.0
                   ? -1
                   : (c.imag() >= 0.0 ? 1 : -1);
      }
      const cxd sgn{static_cast<double>(sign), 0.0};
      const cxd xtx_prime = bilinear(x_prime, x0); // x'(tau0)^T x0

      const cxd alpha0 = sgn / s;
      const cxd alpha_prime0 = -sgn * xtx_prime / (t * s);
      const cxd beta_star0 = sgn * s;
      const cxd beta_star_prime0 = sgn * xtx_prime / s;

      p.x_hat = alpha0 * x0;
      p.y_hat = std::conj(beta_star0) * y0;
      p.x_hat_prime = alpha0 * x_prime + alpha_prime0 * x0;
      p.y_hat_star_prime =
          std::conj(beta_star0) * ystar_prime + std::conj(beta_star_prime0) * y0;
      p.alpha0 = alpha0;
      p.alpha_prime0 = alpha_prime0;
      p.beta_star0 = beta_star0;
      p.beta_star_prime0 = beta_star_prime0;
      p.unique = false; // two-branch choice
      p.used_j = j;
      p.used_sign = sign;
      return p;
    }
    case SchemeKind::N4RP: {
      const double nx = norm(x0);
      const double ny = norm(y0);
      p.x_hat = cxd{1.0 / nx, 0.0} * x0;
      p.y_hat = cxd{1.0 / ny, 0.0} * y0;
      p.alpha0 = cxd{1.0 / nx, 0.0};
      p.beta_star0 = cxd{1.0 / ny, 0.0};
      p.unique = false; // any unimodular rotation also qualifies
      return p;
    }
  }
  raise(ErrorClass::InvalidArgument, "unknown normalization scheme");
}

std::pair<int, int> default_indices(const Vec& x0, const Vec& y0) {
  if (x0.size() == 0 || y0.size() == 0)
    raise(ErrorClass::InvalidArgument, "default_indices on empty vector");
  return {static_cast<int>(argmax_modulus(x0)) + 1,
          static_cast<int>(argmax_modulus(y0)) + 1};
}

int sign_consistency(const Vec& x_hat_tau, const Vec& x_hat_ref, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > x_hat_ref.size() ||
      x_hat_tau.size() != x_hat_ref.size())
    raise(ErrorClass::InvalidArgument, "sign_consistency index");
  const cxd r = x_hat_ref[j - 1];
  const cxd c = x_hat_tau[j - 1];
  const double mod = std::abs(r);
  if (mod == 0.0)
    raise(ErrorClass::AmbiguousSign, "reference entry is zero");
  if (std::abs(r.real()) >= 1e-8 * mod)
    return r.real() * c.real() >= 0.0 ? 1 : -1;
  if (std::abs(r.imag()) >= 1e-8 * mod)
    return r.imag() * c.imag() >= 0.0 ? 1 : -1;
  // Unreachable for a max-modulus entry of a nonzero vector.
  raise(ErrorClass::AmbiguousSign,
        "reference entry has negligible real and imaginary parts");
}

} // namespace eigpert
