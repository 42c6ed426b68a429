// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef EIGPERT_FAMILY_HPP
#define EIGPERT_FAMILY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eigpert/types.hpp"

namespace eigpert {

enum class FamilyKind { Linear, Polynomial, Sampled };

/// Derivative mode for sampled families.
struct SampledDerivative {
  bool exact = false;
  std::function<Mat(cxd)> exact_fn; // used when exact
  double step = 0.0;                // central-difference step; <=0 -> default
  cxd direction{1.0, 0.0};          // unit complex direction for the step
};

/// Analytic matrix family A(tau).
///   Linear:      A(tau) = A0 + (tau - tau0) * DeltaA
///   Polynomial:  A(tau) = sum_k C_k tau^k      (coefficients in tau itself)
///   Sampled:     black-box evaluator, derivative exact or central-difference
class MatrixFamily {
public:
  static constexpr std::size_t kMaxPolynomialDegree = 32;

  /// Default-constructed families are empty placeholders; evaluating one
  /// raises InvalidArgument.
  MatrixFamily() = default;

  static MatrixFamily linear(Mat a0, Mat delta_a, cxd tau0 = cxd{0.0, 0.0});
  static MatrixFamily polynomial(std::vector<Mat> coefficients,
                                 cxd tau0 = cxd{0.0, 0.0});
  static MatrixFamily sampled(std::function<Mat(cxd)> evaluator,
                              std::size_t dimension, cxd tau0,
                              SampledDerivative mode);

  FamilyKind kind() const { return kind_; }
  std::size_t dimension() const { return n_; }
  cxd anchor() const { return tau0_; }

  Mat eval(cxd tau) const;

  struct DerivativeEvaluation {
    Mat a_at;
    Mat aprime_at;
    bool finite_difference = false;
    double step = 0.0;
  };
  DerivativeEvaluation eval_derivative(cxd tau) const;

  // Linear accessors (valid only for kind() == Linear).
  const Mat& a0() const { return terms_[0]; }
  const Mat& delta_a() const { return terms_[1]; }
  const std::vector<Mat>& coefficients() const { return terms_; }

private:
  FamilyKind kind_ = FamilyKind::Linear;
  std::size_t n_ = 0;
  cxd tau0_{0.0, 0.0};
  std::vector<Mat> terms_; // Linear: {A0, DeltaA}; Polynomial: C_0..C_d
  std::function<Mat(cxd)> evaluator_;
  SampledDerivative sampled_mode_;
};

} // namespace eigpert

#endif
