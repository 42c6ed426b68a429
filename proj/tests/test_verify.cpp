// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "eigpert/derivatives.hpp"
#include "eigpert/verify.hpp"
#include "oracle_helpers.hpp"

using eigpert::ContourSpec;
using eigpert::cxd;
using eigpert::EigenSelector;
using eigpert::Mat;
using eigpert::MatrixFamily;
using eigpert::NormalizationScheme;
using eigpert::SchemeKind;
using eigpert::SweepConfig;
using eigpert::SweepResult;
using eigpert::Vec;

namespace {

const Mat kDiag12{{cxd{1, 0}, cxd{0, 0}}, {cxd{0, 0}, cxd{2, 0}}};
const Mat kSwap{{cxd{0, 0}, cxd{1, 0}}, {cxd{1, 0}, cxd{0, 0}}};

MatrixFamily diag_swap_family() { return MatrixFamily::linear(kDiag12, kSwap); }

SweepConfig near_one_config() {
  SweepConfig cfg;
  cfg.steps = SweepConfig::default_steps();
  cfg.selector = EigenSelector::closest_to(cxd{1, 0});
  return cfg;
}

} // namespace

TEST_CASE("lambda sweep on the exact diag(1,2)+tau*swap family") {
  // lambda(tau) = (3 - sqrt(1+4 tau^2))/2 is even, so the formula value 0
  // is approached at O(tau).
  SweepResult r = eigpert::fd_verify_lambda(diag_swap_family(), near_one_config());
  CHECK(std::abs(r.formula_scalar) <= 1e-14);
  CHECK(r.best_abs_error <= 1e-7);
  CHECK_FALSE(r.chi_unreliable);
  for (const auto& rec : r.records) CHECK_FALSE(rec.dropped);
}

TEST_CASE("identity perturbation sweep is floor-dominated") {
  MatrixFamily f = MatrixFamily::linear(kDiag12, Mat::identity(2));
  SweepResult r = eigpert::fd_verify_lambda(f, near_one_config());
  oracle::check_close(r.formula_scalar, oracle::one(), 1e-14);
  // FD quotients equal 1 up to rounding amplified by 1/h.
  for (const auto& rec : r.records) {
    REQUIRE_FALSE(rec.dropped);
    CHECK(std::abs(rec.fd_scalar - oracle::one()) <=
          10.0 * std::numeric_limits<double>::epsilon() / rec.step + 1e-14);
  }
  CHECK(r.floor_dominated);
}

TEST_CASE("projector sweep on the diag family") {
  SweepResult r =
      eigpert::fd_verify_projector(diag_swap_family(), near_one_config());
  CHECK(std::abs(r.formula_norm - std::sqrt(2.0)) <= 1e-12); // [[0,-1],[-1,0]]
  CHECK(r.best_error <= 1e-6);
}

TEST_CASE("projector sweep with identity perturbation stays at zero") {
  MatrixFamily f = MatrixFamily::linear(kDiag12, Mat::identity(2));
  SweepResult r = eigpert::fd_verify_projector(f, near_one_config());
  CHECK(r.formula_norm <= 1e-14);
  for (const auto& rec : r.records) {
    REQUIRE_FALSE(rec.dropped);
    CHECK(rec.quotient_norm <= 1e-8);
  }
}

TEST_CASE("random 8x8 sweeps meet the thresholds with unit slope") {
  MatrixFamily f = eigpert::random_linear_family(7, 8);
  SweepConfig cfg;
  cfg.steps = SweepConfig::default_steps();
  cfg.selector = EigenSelector::largest_modulus();

  SweepResult rl = eigpert::fd_verify_lambda(f, cfg);
  CHECK(rl.best_error <= eigpert::kLambdaSweepThreshold);
  CHECK(std::abs(rl.truncation_slope - 1.0) <= 0.2);
  // Two-regime curve: the optimum is interior, not the largest step.
  CHECK(rl.best_step < cfg.steps.front());
  CHECK(rl.best_step > cfg.steps.back());

  SweepResult rp = eigpert::fd_verify_projector(f, cfg);
  CHECK(rp.best_error <= eigpert::kProjectorSweepThreshold);
  CHECK(std::abs(rp.truncation_slope - 1.0) <= 0.2);

  NormalizationScheme n0;
  auto [rx, ry] = eigpert::fd_verify_eigenvectors(f, cfg, n0);
  CHECK(rx.best_error <= eigpert::kEigvecSweepThreshold);
  CHECK(ry.best_error <= eigpert::kEigvecSweepThreshold);
}

TEST_CASE("eigenvector sweep on the diag family under all schemes") {
  for (SchemeKind kind :
       {SchemeKind::N0, SchemeKind::N1, SchemeKind::N2, SchemeKind::N3}) {
    NormalizationScheme scheme;
    scheme.kind = kind;
    auto [rx, ry] =
        eigpert::fd_verify_eigenvectors(diag_swap_family(), near_one_config(), scheme);
    CHECK(rx.best_error <= 1e-5);
    CHECK(ry.best_error <= 1e-5);
  }
}

TEST_CASE("eigenvector sweep rejects normalization 4") {
  NormalizationScheme scheme;
  scheme.kind = SchemeKind::N4RP;
  try {
    eigpert::fd_verify_eigenvectors(diag_swap_family(), near_one_config(), scheme);
    FAIL("expected NotVerifiable");
  } catch (const eigpert::Error& e) {
    CHECK(e.error_class() == eigpert::ErrorClass::NotVerifiable);
  }
}

TEST_CASE("eigenvector sweep propagates a tau0 pinned-entry failure") {
  // x0 = e2 for the eigenvalue 2 of diag(1,2); pinning j = 1 hits a zero.
  MatrixFamily f = diag_swap_family();
  SweepConfig cfg;
  cfg.steps = SweepConfig::default_steps();
  cfg.selector = EigenSelector::closest_to(cxd{2, 0});
  NormalizationScheme scheme;
  scheme.kind = SchemeKind::N1;
  scheme.index_j = 1;
  try {
    eigpert::fd_verify_eigenvectors(f, cfg, scheme);
    FAIL("expected PinnedEntryZero");
  } catch (const eigpert::Error& e) {
    CHECK(e.error_class() == eigpert::ErrorClass::PinnedEntryZero);
  }
}

TEST_CASE("matching failures drop steps instead of aborting") {
  // With the ladder extended to h = 1, the two eigenvalues of
  // diag(1,2)+tau*swap at tau=1 are 3/2 +- sqrt(5)/2; the one tracking
  // lambda0 = 1 leaves the gap/2 ball, so that step must be dropped.
  SweepConfig cfg = near_one_config();
  cfg.steps.insert(cfg.steps.begin(), 1.0);
  SweepResult r = eigpert::fd_verify_lambda(diag_swap_family(), cfg);
  CHECK(r.records.front().dropped);
  CHECK(r.records.front().note.find("Matching") != std::string::npos);
  CHECK(r.best_error <= 1e-6);
}

TEST_CASE("N3 sweep is immune to injected sign flips") {
  // Flipping the computed pair (x,y) -> (-x,-y) at any step must produce
  // the same normalized vectors after sign consistency.
  MatrixFamily f = diag_swap_family();
  auto t0 = eigpert::extract_triple(kDiag12, EigenSelector::closest_to(cxd{1, 0}));
  auto ss = eigpert::build_structure(kDiag12, t0);
  auto d = eigpert::eigenvector_derivatives(ss, kSwap);
  NormalizationScheme scheme;
  scheme.kind = SchemeKind::N3;
  auto ref = eigpert::apply_normalization(scheme, ss, d.x_prime, d.ystar_prime);

  for (double h : {1e-2, 1e-5, 1e-8}) {
    Mat at = f.eval(cxd{h, 0});
    auto tt = eigpert::extract_triple(at, EigenSelector::closest_to(cxd{1, 0}));
    for (int flip : {1, -1}) {
      Vec xt = cxd{double(flip), 0} * tt.x0;
      Vec yt = cxd{double(flip), 0} * tt.y0;
      const cxd s = std::sqrt(eigpert::bilinear(xt, xt));
      Vec cand = (cxd{1, 0} / s) * xt;
      const int sgn = eigpert::sign_consistency(cand, ref.x_hat, ref.used_j);
      Vec xh = cxd{double(sgn), 0} * cand;
      static Vec unflipped;
      if (flip == 1) {
        unflipped = xh;
      } else {
        CHECK(eigpert::norm(xh - unflipped) == 0.0);
      }
    }
  }
}

TEST_CASE("contour projector on diag(1,2)") {
  Mat p = eigpert::projector_via_contour(kDiag12, {cxd{1, 0}, 0.4, 64});
  oracle::check_mat_close(
      p, Mat{{cxd{1, 0}, cxd{0, 0}}, {cxd{0, 0}, cxd{0, 0}}}, 1e-12);
}

TEST_CASE("contour enclosing no eigenvalue integrates to zero") {
  Mat p = eigpert::projector_via_contour(kDiag12, {cxd{1.5, 0}, 0.1, 64});
  CHECK(eigpert::frobenius_norm(p) <= 1e-12);
}

TEST_CASE("contour oracle agrees with the eigentriple outer product") {
  MatrixFamily f = eigpert::random_linear_family(21, 8);
  Mat a = f.eval(cxd{0, 0});
  auto t = eigpert::extract_triple(a, EigenSelector::largest_modulus());
  Mat pi0 = eigpert::outer(t.x0, t.y0);
  Mat pc = eigpert::projector_via_contour(a, {t.lambda0, t.gap / 2, 64});
  CHECK(eigpert::two_norm(pc - pi0) <= 1e-10);

  // Trapezoid on an analytic periodic integrand converges geometrically:
  // doubling the nodes must cut the error at least tenfold.
  Mat pc32 = eigpert::projector_via_contour(a, {t.lambda0, t.gap / 2, 32});
  const double e32 = eigpert::two_norm(pc32 - pi0);
  const double e64 = eigpert::two_norm(pc - pi0);
  CHECK(e32 >= 10.0 * e64);
}

TEST_CASE("eigenvalue counts by winding number") {
  CHECK(eigpert::count_eigs_in_disk(kDiag12, {cxd{1, 0}, 0.4, 64}) == 1);
  CHECK(eigpert::count_eigs_in_disk(kDiag12, {cxd{1.5, 0}, 1.2, 64}) == 2);
  CHECK(eigpert::count_eigs_in_disk(kDiag12, {cxd{1.5, 0}, 0.1, 64}) == 0);
}

TEST_CASE("contour through an eigenvalue reports ResolventBreakdown") {
  try {
    eigpert::projector_via_contour(kDiag12, {cxd{1.5, 0}, 0.5, 64});
    FAIL("expected ResolventBreakdown");
  } catch (const eigpert::Error& e) {
    CHECK(e.error_class() == eigpert::ErrorClass::ResolventBreakdown);
  }
}

TEST_CASE("under-resolved contour reports NonIntegerResult") {
  try {
    eigpert::count_eigs_in_disk(kDiag12, {cxd{1, 0}, 0.8, 8});
    FAIL("expected NonIntegerResult");
  } catch (const eigpert::Error& e) {
    CHECK(e.error_class() == eigpert::ErrorClass::NonIntegerResult);
  }
}

TEST_CASE("defective demo reproduces the splitting exponents") {
  std::vector<double> grid;
  for (int k = 1; k <= 5; ++k) grid.push_back(std::pow(10.0, -k));

  auto r1 = eigpert::defective_demo(1, grid);
  REQUIRE(r1.fits.size() == 2);
  CHECK(r1.fits[0].quantity == "eigenvalue_modulus");
  CHECK(std::abs(r1.fits[0].fitted_exponent - 0.5) <= 0.02);
  CHECK(r1.fits[1].quantity == "chi");
  CHECK(std::abs(r1.fits[1].fitted_exponent + 0.5) <= 0.05);
  const bool failure_seen = r1.tau0_failure_class == "NotSimple" ||
                            r1.tau0_failure_class == "NearOrthogonalPair";
  CHECK(failure_seen);

  auto r2 = eigpert::defective_demo(2, grid);
  CHECK(std::abs(r2.fits[0].fitted_exponent - 1.5) <= 0.02);
  CHECK(std::abs(r2.fits[1].fitted_exponent + 0.5) <= 0.05);

  // chi values agree with the closed form (1+tau)/(2 sqrt(tau)) from the
  // y^* x = 1 scaling of the exact eigenvectors.
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double tau = r1.fits[1].tau_grid[i];
    const double expected = (1.0 + tau) / (2.0 * std::sqrt(tau));
    CHECK(std::abs(r1.fits[1].values[i] - expected) <= 1e-8 * expected);
  }
}

TEST_CASE("defective demo validates its grid") {
  CHECK_THROWS_AS(eigpert::defective_demo(1, {1e-1, 1e-2, 1e-3}),
                  eigpert::Error);
  CHECK_THROWS_AS(eigpert::defective_demo(1, {0.5, 1e-2, 1e-3, 1e-4, 1e-5}),
                  eigpert::Error);
  CHECK_THROWS_AS(eigpert::defective_demo(3, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}),
                  eigpert::Error);
}

TEST_CASE("sweep configuration validation") {
  SweepConfig cfg = near_one_config();
  cfg.direction = cxd{2, 0};
  CHECK_THROWS_AS(eigpert::fd_verify_lambda(diag_swap_family(), cfg),
                  eigpert::Error);
  cfg = near_one_config();
  cfg.steps = {1e-3, 1e-2};
  CHECK_THROWS_AS(eigpert::fd_verify_lambda(diag_swap_family(), cfg),
                  eigpert::Error);
}

TEST_CASE("sweep along a complex direction matches the real-direction formula") {
  MatrixFamily f = eigpert::random_linear_family(33, 6);
  SweepConfig cfg;
  cfg.steps = SweepConfig::default_steps();
  cfg.selector = EigenSelector::largest_modulus();
  const double s = 1.0 / std::sqrt(2.0);
  cfg.direction = cxd{s, s};
  SweepResult r = eigpert::fd_verify_lambda(f, cfg);
  // Analyticity: the derivative is direction-independent.
  CHECK(r.best_error <= 1e-6);
}
