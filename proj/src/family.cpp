// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/family.hpp"

#include <cmath>
#include <limits>

namespace eigpert {

namespace {

void check_square_same(const std::vector<Mat>& terms) {
  if (terms.empty()) raise(ErrorClass::InvalidArgument, "family has no terms");
  const std::size_t n = terms[0].rows();
  for (const Mat& m : terms) {
    require_square(m, "family coefficient must be square");
    if (m.rows() != n)
      raise(ErrorClass::DimensionMismatch,
            "family coefficients must share one dimension");
  }
}

} // namespace

MatrixFamily MatrixFamily::linear(Mat a0, Mat delta_a, cxd tau0) {
  MatrixFamily f;
  f.kind_ = FamilyKind::Linear;
  f.terms_ = {std::move(a0), std::move(delta_a)};
  check_square_same(f.terms_);
  f.n_ = f.terms_[0].rows();
  f.tau0_ = tau0;
  return f;
}

MatrixFamily MatrixFamily::polynomial(std::vector<Mat> coefficients,
                                      cxd tau0) {
  if (coefficients.size() > kMaxPolynomialDegree + 1)
    raise(ErrorClass::InvalidArgument,
          "polynomial degree exceeds the cap of 32");
  MatrixFamily f;
  f.kind_ = FamilyKind::Polynomial;
  f.terms_ = std::move(coefficients);
  check_square_same(f.terms_);
  f.n_ = f.terms_[0].rows();
  f.tau0_ = tau0;
  return f;
}

MatrixFamily MatrixFamily::sampled(std::function<Mat(cxd)> evaluator,
                                   std::size_t dimension, cxd tau0,
                                   SampledDerivative mode) {
  if (!evaluator)
    raise(ErrorClass::InvalidArgument, "sampled family needs an evaluator");
  if (std::abs(std::abs(mode.direction) - 1.0) > 1e-12)
    raise(ErrorClass::InvalidArgument,
          "finite-difference direction must have unit modulus");
  MatrixFamily f;
  f.kind_ = FamilyKind::Sampled;
  f.n_ = dimension;
  f.tau0_ = tau0;
  f.evaluator_ = std::move(evaluator);
  f.sampled_mode_ = std::move(mode);
  return f;
}

Mat MatrixFamily::eval(cxd tau) const {
  if (terms_.empty() && !evaluator_)
    raise(ErrorClass::InvalidArgument, "evaluating an empty family");
  switch (kind_) {
    case FamilyKind::Linear: {
      Mat r = terms_[0];
      r += (tau - tau0_) * terms_[1];
      return r;
    }
    case FamilyKind::Polynomial: {
      // Horner in tau.
      Mat r = terms_.back();
      for (std::size_t k = terms_.size() - 1; k-- > 0;) {
        r = tau * r;
        r += terms_[k];
      }
      return r;
    }
    case FamilyKind::Sampled: {
      Mat r;
      try {
        r = evaluator_(tau);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        raise(ErrorClass::EvaluatorFailure, e.what());
      }
      if (r.rows() != n_ || r.cols() != n_)
        raise(ErrorClass::DimensionMismatch,
              "sampled evaluator returned wrong dimension");
      return r;
    }
  }
  raise(ErrorClass::InvalidArgument, "unknown family kind");
}

MatrixFamily::DerivativeEvaluation MatrixFamily::eval_derivative(
    cxd tau) const {
  DerivativeEvaluation d;
  d.a_at = eval(tau);
  switch (kind_) {
    case FamilyKind::Linear:
      d.aprime_at = terms_[1];
      return d;
    case FamilyKind::Polynomial: {
      // Formal derivative sum_k k C_k tau^{k-1}, evaluated by Horner.
      if (terms_.size() == 1) {
        d.aprime_at = Mat(n_, n_);
        return d;
      }
      Mat r = cxd(static_cast<double>(terms_.size() - 1), 0.0) * terms_.back();
      for (std::size_t k = terms_.size() - 1; k-- > 1;) {
        r = tau * r;
        r += cxd(static_cast<double>(k), 0.0) * terms_[k];
      }
      d.aprime_at = r;
      return d;
    }
    case FamilyKind::Sampled: {
      if (sampled_mode_.exact) {
        Mat ap;
        try {
          ap = sampled_mode_.exact_fn(tau);
        } catch (const Error&) {
          throw;
        } catch (const std::exception& e) {
          raise(ErrorClass::EvaluatorFailure, e.what());
        }
        if (ap.rows() != n_ || ap.cols() != n_)
          raise(ErrorClass::DimensionMismatch,
                "sampled derivative returned wrong dimension");
        d.aprime_at = ap;
        return d;
      }
      double h = sampled_mode_.step;
      if (h <= 0.0) {
        // cbrt(eps) balances central-difference truncation vs roundoff.
        h = std::cbrt(std::numeric_limits<double>::epsilon()) *
            std::max(1.0, std::abs(tau));
      }
      const cxd dstep = h * sampled_mode_.direction;
      Mat plus = eval(tau + dstep);
      Mat minus = eval(tau - dstep);
      plus -= minus;
      plus *= cxd{1.0, 0.0} / (2.0 * dstep);
      d.aprime_at = std::move(plus);
      d.finite_difference = true;
      d.step = h;
      return d;
    }
  }
  raise(ErrorClass::InvalidArgument, "unknown family kind");
}

} // namespace eigpert
