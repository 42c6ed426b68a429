// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "eigpert/derivatives.hpp"
#include "oracle_helpers.hpp"

using eigpert::cxd;
using eigpert::EigenSelector;
using eigpert::EigenTriple;
using eigpert::Mat;
using eigpert::SpectralStructure;
using eigpert::Vec;

namespace {

const Mat kDiag12{{cxd{1, 0}, cxd{0, 0}}, {cxd{0, 0}, cxd{2, 0}}};
const Mat kSwap{{cxd{0, 0}, cxd{1, 0}}, {cxd{1, 0}, cxd{0, 0}}};

SpectralStructure diag12_structure() {
  return eigpert::build_structure(
      kDiag12, eigpert::extract_triple(kDiag12,
                                       EigenSelector::closest_to(cxd{1, 0})));
}

} // namespace

TEST_CASE("identity perturbation moves every eigenvalue at unit rate") {
  EigenTriple t =
      eigpert::extract_triple(kDiag12, EigenSelector::closest_to(cxd{1, 0}));
  oracle::check_close(eigpert::lambda_derivative(t, Mat::identity(2)),
                      oracle::one(), 1e-14);
}

TEST_CASE("lambda' vanishes for the symmetric swap perturbation of diag(1,2)") {
  // Exact branch: lambda(tau) = (3 - sqrt(1 + 4 tau^2)) / 2, flat at 0.
  EigenTriple t =
      eigpert::extract_triple(kDiag12, EigenSelector::closest_to(cxd{1, 0}));
  oracle::check_close(eigpert::lambda_derivative(t, kSwap), cxd{0, 0}, 1e-14);
}

TEST_CASE("lambda' on the triangular example is -1") {
  Mat a{{cxd{1, 0}, cxd{1, 0}}, {cxd{0, 0}, cxd{2, 0}}};
  Mat aprime{{cxd{0, 0}, cxd{0, 0}}, {cxd{1, 0}, cxd{0, 0}}}; // e2 e1^T
  EigenTriple t =
      eigpert::extract_triple(a, EigenSelector::closest_to(cxd{1, 0}));
  oracle::check_close(eigpert::lambda_derivative(t, aprime), cxd{-1, 0}, 1e-13);
}

TEST_CASE("trace form on a hand-picked projector") {
  Mat pi0{{cxd{1, 0}, cxd{0, 0}}, {cxd{0, 0}, cxd{0, 0}}};
  Mat aprime{{cxd{5, 0}, cxd{0, 0}}, {cxd{0, 0}, cxd{7, 0}}};
  oracle::check_close(eigpert::lambda_derivative_trace(pi0, aprime), cxd{5, 0},
                      1e-15);
}

TEST_CASE("trace form of a rank-one projector is the bilinear form") {
  eigpert::GaussianStream g(8);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + (rep % 6);
    Vec x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = cxd{g.normal(), g.normal()};
      y[i] = cxd{g.normal(), g.normal()};
    }
    Mat aprime = eigpert::random_gaussian_matrix(g, n);
    const cxd lhs =
        eigpert::lambda_derivative_trace(eigpert::outer(x, y), aprime);
    const cxd rhs = eigpert::dot(y, aprime * x);
    oracle::check_close(lhs, rhs, 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("two lambda' forms agree on random instances") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 2 + (seed % 19);
    Mat a = oracle::seeded_matrix(seed * 31 + 7, n);
    Mat aprime = oracle::seeded_matrix(seed * 31 + 8, n);
    EigenTriple t = eigpert::extract_triple(a, EigenSelector::largest_modulus());
    const cxd f1 = eigpert::lambda_derivative(t, aprime);
    const cxd f2 =
        eigpert::lambda_derivative_trace(eigpert::outer(t.x0, t.y0), aprime);
    CHECK(std::abs(f1 - f2) <= 1e-12 * (1.0 + std::abs(f1)));
    CHECK(std::abs(f1) <= t.chi * eigpert::two_norm(aprime) + 1e-12);
  }
}

TEST_CASE("eigenvector derivatives on the diag(1,2)+tau*swap family") {
  SpectralStructure ss = diag12_structure();
  auto d = eigpert::eigenvector_derivatives(ss, kSwap);
  oracle::check_vec_close(d.x_prime, Vec{cxd{0, 0}, cxd{-1, 0}}, 1e-13);
  oracle::check_vec_close(d.ystar_prime, Vec{cxd{0, 0}, cxd{-1, 0}}, 1e-13);
}

TEST_CASE("identity perturbation leaves the eigenvectors fixed") {
  SpectralStructure ss = diag12_structure();
  auto d = eigpert::eigenvector_derivatives(ss, Mat::identity(2));
  CHECK(eigpert::norm(d.x_prime) <= 1e-14);
  CHECK(eigpert::norm(d.ystar_prime) <= 1e-14);
  oracle::check_mat_close(eigpert::projector_derivative(ss, Mat::identity(2)),
                          Mat(2, 2), 1e-14);
}

TEST_CASE("projector derivative of the diag family") {
  SpectralStructure ss = diag12_structure();
  oracle::check_mat_close(
      eigpert::projector_derivative(ss, kSwap),
      Mat{{cxd{0, 0}, cxd{-1, 0}}, {cxd{-1, 0}, cxd{0, 0}}}, 1e-13);
}

TEST_CASE("Theorem-2 orthogonality and assembled projector derivative") {
  for (std::uint64_t seed = 200; seed <= 240; ++seed) {
    const std::size_t n = 2 + (seed % 17);
    Mat a = oracle::seeded_matrix(seed, n);
    Mat aprime = oracle::seeded_matrix(seed + 5000, n);
    EigenTriple t = eigpert::extract_triple(a, EigenSelector::largest_modulus());
    SpectralStructure ss = eigpert::build_structure(a, t);
    auto d = eigpert::eigenvector_derivatives(ss, aprime);

    const double scale = eigpert::norm(d.x_prime) + eigpert::norm(d.ystar_prime) + 1.0;
    CHECK(std::abs(eigpert::dot(t.y0, d.x_prime)) <= 1e-10 * t.chi * scale);
    CHECK(std::abs(eigpert::dot(d.ystar_prime, t.x0)) <= 1e-10 * scale);

    // Pi' from the formula equals x' y0^* + x0 (y*)'.
    Mat pi_prime = eigpert::projector_derivative(ss, aprime);
    Mat assembled = eigpert::outer(d.x_prime, t.y0);
    assembled += eigpert::outer(t.x0, d.ystar_prime);
    oracle::check_mat_close(assembled, pi_prime,
                            1e-12 * std::max(1.0, eigpert::frobenius_norm(pi_prime)));

    // Differentiated idempotence and eigen-relation.
    const double npp = eigpert::frobenius_norm(pi_prime);
    oracle::check_mat_close(pi_prime * ss.pi0 + ss.pi0 * pi_prime, pi_prime,
                            1e-10 * std::max(npp, 1.0) * t.chi);
    Mat lhs = aprime * ss.pi0 + a * pi_prime;
    Mat rhs = eigpert::lambda_derivative(t, aprime) * ss.pi0 +
              t.lambda0 * pi_prime;
    oracle::check_mat_close(
        lhs, rhs,
        1e-10 * (eigpert::two_norm(a) + std::abs(t.lambda0)) *
            std::max(npp, 1.0));

    // Norm bounds from the structure.
    auto b = eigpert::derivative_bound(ss, aprime);
    CHECK(eigpert::norm(d.x_prime) / eigpert::norm(t.x0) <= b.value + 1e-10);
    CHECK(eigpert::norm(d.ystar_prime) / eigpert::norm(t.y0) <= b.value + 1e-10);
  }
}

TEST_CASE("Remark-1 scaling invariance of the derivative formulas") {
  eigpert::GaussianStream g(4242);
  for (std::uint64_t seed = 900; seed <= 920; ++seed) {
    const std::size_t n = 3 + (seed % 10);
    Mat a = oracle::seeded_matrix(seed, n);
    Mat aprime = oracle::seeded_matrix(seed + 31, n);
    EigenTriple t = eigpert::extract_triple(a, EigenSelector::largest_modulus());
    SpectralStructure ss = eigpert::build_structure(a, t);

    const cxd omega{g.normal() + 2.0, g.normal()}; // bounded away from 0
    EigenTriple t2 = t;
    t2.x0 = omega * t.x0;
    t2.y0 = (cxd{1, 0} / std::conj(omega)) * t.y0;
    t2.chi = eigpert::norm(t2.x0) * eigpert::norm(t2.y0);
    SpectralStructure ss2 = eigpert::build_structure(a, t2);

    // lambda', Pi0, Pi', S unchanged.
    const cxd l1 = eigpert::lambda_derivative(t, aprime);
    const cxd l2 = eigpert::lambda_derivative(t2, aprime);
    CHECK(std::abs(l1 - l2) <= 1e-12 * (1.0 + std::abs(l1)));
    oracle::check_mat_close(ss2.pi0, ss.pi0,
                            1e-12 * std::max(1.0, eigpert::two_norm(ss.pi0)));
    oracle::check_mat_close(ss2.s, ss.s,
                            1e-12 * std::max(1.0, eigpert::two_norm(ss.s)));
    Mat p1 = eigpert::projector_derivative(ss, aprime);
    Mat p2 = eigpert::projector_derivative(ss2, aprime);
    oracle::check_mat_close(p1, p2,
                            1e-12 * std::max(1.0, eigpert::frobenius_norm(p1)));

    // x' scales by omega, (y*)' by 1/conj(omega).
    auto d1 = eigpert::eigenvector_derivatives(ss, aprime);
    auto d2 = eigpert::eigenvector_derivatives(ss2, aprime);
    oracle::check_vec_close(d2.x_prime, omega * d1.x_prime,
                            1e-12 * std::abs(omega) *
                                std::max(1.0, eigpert::norm(d1.x_prime)));
    oracle::check_vec_close(d2.ystar_prime,
                            (cxd{1, 0} / std::conj(omega)) * d1.ystar_prime,
                            1e-12 * std::max(1.0, eigpert::norm(d2.ystar_prime)));
  }
}

TEST_CASE("sensitivity report invariants") {
  Mat a = oracle::seeded_matrix(1234, 9);
  Mat aprime = oracle::seeded_matrix(1235, 9);
  EigenTriple t = eigpert::extract_triple(a, EigenSelector::largest_modulus());
  SpectralStructure ss = eigpert::build_structure(a, t);
  auto r = eigpert::sensitivity_report(ss, aprime);
  CHECK(std::abs(r.lambda_prime - r.lambda_prime_trace_form) <=
        1e-12 * (1.0 + std::abs(r.lambda_prime)));
  CHECK(std::abs(r.lambda_prime) <= r.chi_times_norm_aprime + 1e-12);
  CHECK(eigpert::norm(r.x_prime) / eigpert::norm(t.x0) <= r.bound_rhs + 1e-10);
  CHECK(r.bound_rhs_gap_form > 0.0);
}

TEST_CASE("dimension mismatches are rejected") {
  EigenTriple t =
      eigpert::extract_triple(kDiag12, EigenSelector::closest_to(cxd{1, 0}));
  CHECK_THROWS_AS(eigpert::lambda_derivative(t, Mat::identity(3)),
                  eigpert::Error);
  SpectralStructure ss = diag12_structure();
  CHECK_THROWS_AS(eigpert::eigenvector_derivatives(ss, Mat::identity(3)),
                  eigpert::Error);
  CHECK_THROWS_AS(eigpert::projector_derivative(ss, Mat(2, 3)), eigpert::Error);
}
