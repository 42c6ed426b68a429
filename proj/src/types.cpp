// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/types.hpp"

#include <cmath>
#include <utility>

#include "eigpert/kernels.hpp"

namespace eigpert {

namespace {

void check_finite(const std::vector<cxd>& entries, const char* what) {
  for (const cxd& z : entries)
    if (!is_finite(z)) raise(ErrorClass::NonFinite, what);
}

} // namespace

bool is_finite(cxd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

const char* error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::ParseError: return "ParseError";
    case ErrorClass::NonFinite: return "NonFinite";
    case ErrorClass::DimensionMismatch: return "DimensionMismatch";
    case ErrorClass::NotSquare: return "NotSquare";
    case ErrorClass::NonConvergence: return "NonConvergence";
    case ErrorClass::SingularToTolerance: return "SingularToTolerance";
    case ErrorClass::NotSimple: return "NotSimple";
    case ErrorClass::PairingAmbiguous: return "PairingAmbiguous";
    case ErrorClass::NearOrthogonalPair: return "NearOrthogonalPair";
    case ErrorClass::SingularDecoupling: return "SingularDecoupling";
    case ErrorClass::ReorderFailure: return "ReorderFailure";
    case ErrorClass::EvaluatorFailure: return "EvaluatorFailure";
    case ErrorClass::BranchCutViolation: return "BranchCutViolation";
    case ErrorClass::PinnedEntryZero: return "PinnedEntryZero";
    case ErrorClass::IsotropicVector: return "IsotropicVector";
    case ErrorClass::AmbiguousSign: return "AmbiguousSign";
    case ErrorClass::MatchingFailure: return "MatchingFailure";
    case ErrorClass::ResolventBreakdown: return "ResolventBreakdown";
    case ErrorClass::NonIntegerResult: return "NonIntegerResult";
    case ErrorClass::NotVerifiable: return "NotVerifiable";
    case ErrorClass::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

int exit_code_for(ErrorClass c) {
  switch (c) {
    case ErrorClass::ParseError:
    case ErrorClass::NonFinite:
    case ErrorClass::InvalidArgument:
      return 2;
    case ErrorClass::NotSimple:
    case ErrorClass::PairingAmbiguous:
    case ErrorClass::NearOrthogonalPair:
    case ErrorClass::SingularDecoupling:
      return 3;
    case ErrorClass::PinnedEntryZero:
    case ErrorClass::IsotropicVector:
    case ErrorClass::NotVerifiable:
    case ErrorClass::BranchCutViolation:
      return 5;
    default:
      return 4;
  }
}

Vec::Vec(std::initializer_list<cxd> xs) : e_(xs) {
  check_finite(e_, "vector entry not finite");
}

Vec Vec::from_entries(std::vector<cxd> entries) {
  check_finite(entries, "vector entry not finite");
  Vec v;
  v.e_ = std::move(entries);
  return v;
}

Vec Vec::unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = cxd{1.0, 0.0};
  return v;
}

Vec& Vec::operator*=(cxd s) {
  for (cxd& z : e_) z *= s;
  return *this;
}

Vec& Vec::operator+=(const Vec& o) {
  if (o.size() != size()) raise(ErrorClass::DimensionMismatch, "vector add");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (o.size() != size()) raise(ErrorClass::DimensionMismatch, "vector sub");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o[i];
  return *this;
}

Vec operator*(cxd s, const Vec& v) {
  Vec r = v;
  r *= s;
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  r += b;
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  r -= b;
  return r;
}

cxd dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) raise(ErrorClass::DimensionMismatch, "dot");
  cxd acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cxd bilinear(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) raise(ErrorClass::DimensionMismatch, "bilinear");
  cxd acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double norm(const Vec& v) {
  double acc = 0.0;
  for (const cxd& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

Vec conj(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = std::conj(v[i]);
  return r;
}

std::size_t argmax_modulus(const Vec& v) {
  std::size_t best = 0;
  double best_mod = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double m = std::abs(v[i]);
    if (m > best_mod) {
      best_mod = m;
      best = i;
    }
  }
  return best;
}

Mat::Mat(std::initializer_list<std::initializer_list<cxd>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      raise(ErrorClass::DimensionMismatch, "ragged initializer rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
  check_finite(a_, "matrix entry not finite");
}

Mat Mat::from_entries(std::size_t rows, std::size_t cols,
                      std::vector<cxd> entries) {
  if (entries.size() != rows * cols)
    raise(ErrorClass::DimensionMismatch, "entry count != rows*cols");
  check_finite(entries, "matrix entry not finite");
  Mat m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.a_ = std::move(entries);
  return m;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cxd{1.0, 0.0};
  return m;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Mat::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) raise(ErrorClass::DimensionMismatch, "set_col");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::block(std::size_t i0, std::size_t j0, std::size_t r,
               std::size_t c) const {
  if (i0 + r > rows_ || j0 + c > cols_)
    raise(ErrorClass::DimensionMismatch, "block out of range");
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
  return m;
}

Mat Mat::adjoint() const {
  Mat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o, "matrix add");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o, "matrix sub");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(cxd s) {
  for (cxd& z : a_) z *= s;
  return *this;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r = a;
  r += b;
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat r = a;
  r -= b;
  return r;
}

Mat operator*(cxd s, const Mat& a) {
  Mat r = a;
  r *= s;
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) raise(ErrorClass::DimensionMismatch, "matmul");
  Mat c(a.rows(), b.cols());
  kern::gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

Vec operator*(const Mat& a, const Vec& x) {
  if (a.cols() != x.size()) raise(ErrorClass::DimensionMismatch, "matvec");
  Vec y(a.rows());
  kern::gemv(a.data(), x.data(), y.data(), a.rows(), a.cols());
  return y;
}

Vec left_apply(const Vec& y_row, const Mat& a) {
  if (y_row.size() != a.rows())
    raise(ErrorClass::DimensionMismatch, "left_apply");
  Vec r(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    cxd acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) acc += y_row[i] * a(i, j);
    r[j] = acc;
  }
  return r;
}

Mat outer(const Vec& x, const Vec& y) {
  Mat m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

cxd trace(const Mat& a) {
  require_square(a, "trace");
  cxd acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

double frobenius_norm(const Mat& a) {
  double acc = 0.0;
  const cxd* p = a.data();
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) acc += std::norm(p[i]);
  return std::sqrt(acc);
}

double max_abs(const Mat& a) {
  double m = 0.0;
  const cxd* p = a.data();
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
    m = std::max(m, std::abs(p[i]));
  return m;
}

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    raise(ErrorClass::DimensionMismatch, what);
}

void require_square(const Mat& a, const char* what) {
  if (!a.square()) raise(ErrorClass::NotSquare, what);
}

} // namespace eigpert
