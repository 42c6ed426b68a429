// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef EIGPERT_EIGENTRIPLE_HPP
#define EIGPERT_EIGENTRIPLE_HPP

#include <limits>

#include "eigpert/dense_backend.hpp"
#include "eigpert/types.hpp"

namespace eigpert {

/// Which eigenvalue of the spectrum to analyze.
struct EigenSelector {
  enum class Mode { ClosestTo, LargestReal, LargestModulus, Index };

  Mode mode = Mode::LargestModulus;
  cxd target{0.0, 0.0};  // ClosestTo
  std::size_t index = 0; // Index, 0-based

  static EigenSelector closest_to(cxd t) {
    return {Mode::ClosestTo, t, 0};
  }
  static EigenSelector largest_real() {
    return {Mode::LargestReal, cxd{}, 0};
  }
  static EigenSelector largest_modulus() {
    return {Mode::LargestModulus, cxd{}, 0};
  }
  static EigenSelector by_index(std::size_t k) {
    return {Mode::Index, cxd{}, k};
  }

  std::size_t pick(const std::vector<cxd>& eigenvalues) const;
};

/// Simple eigenvalue with paired right/left eigenvectors, y0^* x0 = 1.
/// x0 has unit norm with its max-modulus entry rotated to the positive real
/// axis; y0 carries the full condition-number scale (chi = ||y0||).
struct EigenTriple {
  cxd lambda0{0.0, 0.0};
  Vec x0;
  Vec y0;
  double gap = std::numeric_limits<double>::infinity();
  double chi = 1.0;
  double right_residual = 0.0;
  double left_residual = 0.0;
};

constexpr double kDefaultSimplicityTol = 1e-8;

EigenTriple extract_triple(const Mat& a, const EigenSelector& sel,
                           double simplicity_tol = kDefaultSimplicityTol);

/// Same contract, reusing an already computed eigendecomposition of a.
EigenTriple extract_triple_from(const Mat& a, const EigenDecomposition& right,
                                const EigenSelector& sel,
                                double simplicity_tol = kDefaultSimplicityTol);

/// chi = ||x0|| ||y0||; equals ||Pi0|| for the associated eigenprojector.
double condition_number(const EigenTriple& t);

} // namespace eigpert

#endif
