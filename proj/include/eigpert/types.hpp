// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef EIGPERT_TYPES_HPP
#define EIGPERT_TYPES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "eigpert/error.hpp"

namespace eigpert {

using cxd = std::complex<double>;

bool is_finite(cxd z);

/// Dense complex column vector. Entries are validated to be finite on every
/// public construction path; arithmetic assumes validated inputs.
class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t n) : e_(n, cxd{0.0, 0.0}) {}
  Vec(std::initializer_list<cxd> xs);
  static Vec from_entries(std::vector<cxd> entries);
  static Vec unit(std::size_t n, std::size_t k);

  std::size_t size() const { return e_.size(); }
  cxd& operator[](std::size_t i) { return e_[i]; }
  const cxd& operator[](std::size_t i) const { return e_[i]; }
  cxd* data() { return e_.data(); }
  const cxd* data() const { return e_.data(); }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  Vec& operator*=(cxd s);
  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);

private:
  std::vector<cxd> e_;
};

Vec operator*(cxd s, const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

/// x^* y (conjugate-linear in the first argument).
cxd dot(const Vec& x, const Vec& y);
/// x^T y, no conjugation.
cxd bilinear(const Vec& x, const Vec& y);
double norm(const Vec& v);
Vec conj(const Vec& v);
/// Index (0-based) of a maximum-modulus entry; ties broken by lowest index.
std::size_t argmax_modulus(const Vec& v);

/// Dense complex matrix, row-major. Square-ness is checked by the operations
/// that need it, not assumed.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cxd{0.0, 0.0}) {}
  Mat(std::initializer_list<std::initializer_list<cxd>> rows);
  static Mat from_entries(std::size_t rows, std::size_t cols,
                          std::vector<cxd> entries);
  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cxd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  cxd* data() { return a_.data(); }
  const cxd* data() const { return a_.data(); }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);
  Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;

  Mat adjoint() const;   // conjugate transpose
  Mat transpose() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cxd s);

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cxd> a_; // row-major
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(cxd s, const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& x);
/// Row functional applied on the left: returns the entries of (y_row^T A).
/// y_row holds row entries as-is (no implicit conjugation).
Vec left_apply(const Vec& y_row, const Mat& a);

Mat outer(const Vec& x, const Vec& y); // x y^*
cxd trace(const Mat& a);
double frobenius_norm(const Mat& a);
double max_abs(const Mat& a);

void require_same_shape(const Mat& a, const Mat& b, const char* what);
void require_square(const Mat& a, const char* what);

} // namespace eigpert

#endif
