// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "eigpert/family.hpp"
#include "eigpert/verify.hpp"
#include "oracle_helpers.hpp"

using eigpert::cxd;
using eigpert::Mat;
using eigpert::MatrixFamily;

TEST_CASE("linear family evaluates exactly") {
  MatrixFamily f = MatrixFamily::linear(Mat(2, 2), Mat::identity(2));
  Mat a = f.eval(cxd{3.0, 0.0});
  CHECK(a(0, 0) == cxd{3, 0});
  CHECK(a(1, 1) == cxd{3, 0});
  CHECK(a(0, 1) == cxd{0, 0});
}

TEST_CASE("linear family at the anchor returns A0 bit-for-bit") {
  eigpert::GaussianStream g(17);
  Mat a0 = eigpert::random_gaussian_matrix(g, 5);
  Mat da = eigpert::random_gaussian_matrix(g, 5);
  MatrixFamily f = MatrixFamily::linear(a0, da, cxd{0.25, -0.5});
  Mat at = f.eval(cxd{0.25, -0.5});
  CHECK(eigpert::max_abs(at - a0) == 0.0);
}

TEST_CASE("splitting example family [[0,1],[tau,0]] at tau = 0.04") {
  Mat a = eigpert::defective_example_family(1).eval(cxd{0.04, 0.0});
  CHECK(a(0, 0) == cxd{0, 0});
  CHECK(a(0, 1) == cxd{1, 0});
  CHECK(a(1, 0) == cxd{0.04, 0});
  CHECK(a(1, 1) == cxd{0, 0});
}

TEST_CASE("polynomial Horner evaluation at tau = 2") {
  eigpert::GaussianStream g(23);
  Mat c0 = eigpert::random_gaussian_matrix(g, 3);
  Mat c1 = eigpert::random_gaussian_matrix(g, 3);
  Mat c2 = eigpert::random_gaussian_matrix(g, 3);
  MatrixFamily f = MatrixFamily::polynomial({c0, c1, c2});
  Mat expect = c0 + cxd{2, 0} * c1 + cxd{4, 0} * c2;
  oracle::check_mat_close(f.eval(cxd{2, 0}), expect, 1e-14);
}

TEST_CASE("linear derivative is DeltaA at every tau") {
  eigpert::GaussianStream g(29);
  Mat a0 = eigpert::random_gaussian_matrix(g, 4);
  Mat da = eigpert::random_gaussian_matrix(g, 4);
  MatrixFamily f = MatrixFamily::linear(a0, da);
  for (cxd tau : {cxd{0, 0}, cxd{1.5, 0.25}, cxd{-7, 2}}) {
    auto d = f.eval_derivative(tau);
    CHECK(eigpert::max_abs(d.aprime_at - da) == 0.0);
    CHECK_FALSE(d.finite_difference);
  }
}

TEST_CASE("semisimple example family has derivative [[0,1],[0,0]] at 0") {
  auto d = eigpert::defective_example_family(2).eval_derivative(cxd{0, 0});
  CHECK(d.aprime_at(0, 0) == cxd{0, 0});
  CHECK(d.aprime_at(0, 1) == cxd{1, 0});
  CHECK(d.aprime_at(1, 0) == cxd{0, 0});
  CHECK(d.aprime_at(1, 1) == cxd{0, 0});
}

TEST_CASE("sampled family central difference approximates a linear family") {
  eigpert::GaussianStream g(31);
  Mat a0 = eigpert::random_gaussian_matrix(g, 4);
  Mat da = eigpert::random_gaussian_matrix(g, 4);
  MatrixFamily lin = MatrixFamily::linear(a0, da);
  eigpert::SampledDerivative mode;
  mode.step = 1e-6;
  MatrixFamily f = MatrixFamily::sampled(
      [lin](cxd tau) { return lin.eval(tau); }, 4, cxd{0, 0}, mode);
  auto d = f.eval_derivative(cxd{0.3, 0.1});
  CHECK(d.finite_difference);
  CHECK(eigpert::frobenius_norm(d.aprime_at - da) <= 1e-9);
}

TEST_CASE("polynomial derivative agrees with central differences at O(h^2)") {
  eigpert::GaussianStream g(37);
  std::vector<Mat> cs;
  for (int k = 0; k < 4; ++k) cs.push_back(eigpert::random_gaussian_matrix(g, 3));
  MatrixFamily f = MatrixFamily::polynomial(cs);
  const cxd tau{0.4, 0.2};
  const Mat exact = f.eval_derivative(tau).aprime_at;

  // Two-decade ladder: each decade should cut the error ~100x while the
  // truncation term dominates rounding.
  double prev_err = -1.0;
  for (double h : {1e-2, 1e-3, 1e-4}) {
    Mat fd = f.eval(tau + h) - f.eval(tau - h);
    fd *= cxd{1.0 / (2.0 * h), 0.0};
    const double err = eigpert::frobenius_norm(fd - exact);
    if (prev_err > 0.0) {
      CHECK(prev_err / err > 30.0);
      CHECK(prev_err / err < 300.0);
    }
    prev_err = err;
  }
}

TEST_CASE("polynomial degree cap") {
  std::vector<Mat> cs(34, Mat::identity(2));
  CHECK_THROWS_AS(MatrixFamily::polynomial(cs), eigpert::Error);
}

TEST_CASE("empty family evaluation is rejected") {
  MatrixFamily f;
  CHECK_THROWS_AS(f.eval(cxd{0, 0}), eigpert::Error);
}

TEST_CASE("sampled evaluator failures surface as EvaluatorFailure") {
  eigpert::SampledDerivative mode;
  MatrixFamily f = MatrixFamily::sampled(
      [](cxd) -> Mat { throw std::runtime_error("backend unavailable"); }, 2,
      cxd{0, 0}, mode);
  try {
    f.eval(cxd{0, 0});
    FAIL("expected EvaluatorFailure");
  } catch (const eigpert::Error& e) {
    CHECK(e.error_class() == eigpert::ErrorClass::EvaluatorFailure);
  }
}

TEST_CASE("sampled evaluator dimension mismatch is rejected") {
  eigpert::SampledDerivative mode;
  MatrixFamily f = MatrixFamily::sampled([](cxd) { return Mat(3, 3); }, 2,
                                         cxd{0, 0}, mode);
  CHECK_THROWS_AS(f.eval(cxd{0, 0}), eigpert::Error);
}
