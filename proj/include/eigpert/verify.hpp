// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0
//
// Numerical verification harness: finite-difference sweeps over a step
// ladder for every derivative formula, a contour-integral oracle for the
// eigenprojector and eigenvalue counts, and the defective-eigenvalue demos.
//
// Sweep steps and contour nodes are independent and evaluated in parallel;
// results are assembled in index order, so output is identical at any thread
// count.

#ifndef EIGPERT_VERIFY_HPP
#define EIGPERT_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "eigpert/family.hpp"
#include "eigpert/normalization.hpp"

namespace eigpert {

// Pass/fail thresholds for best relative sweep errors.
constexpr double kLambdaSweepThreshold = 1e-6;
constexpr double kProjectorSweepThreshold = 1e-5;
constexpr double kEigvecSweepThreshold = 1e-5;
// chi above this makes sweep verdicts unreliable rather than failed.
constexpr double kChiUnreliable = 1e6;

struct SweepConfig {
  cxd direction{1.0, 0.0}; // unit complex step direction
  std::vector<double> steps;
  EigenSelector selector;
  double simplicity_tol = kDefaultSimplicityTol;

  static std::vector<double> default_steps(); // 1e-1 .. 1e-12, ratio 10
};

struct SweepRecord {
  double step = 0.0;
  cxd fd_scalar{0.0, 0.0}; // scalar quantity only
  double quotient_norm = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool dropped = false;
  std::string note;
};

struct SweepResult {
  std::string quantity;
  cxd formula_scalar{0.0, 0.0};
  double formula_norm = 0.0;
  std::vector<SweepRecord> records;
  double best_step = 0.0;
  double best_error = 0.0;     // min relative error over kept records
  double best_abs_error = 0.0;
  double truncation_slope = 0.0; // log-log fit over the pre-floor regime
  bool floor_dominated = false;  // too few pre-floor points to fit
  double chi = 0.0;
  bool chi_unreliable = false;
};

/// FD quotients (lambda~ - lambda0)/(h d) against lambda'(tau0).
SweepResult fd_verify_lambda(const MatrixFamily& f, const SweepConfig& cfg);

/// Frobenius ladder of (Pi~ - Pi0)/(h d) against Pi'(tau0).
SweepResult fd_verify_projector(const MatrixFamily& f, const SweepConfig& cfg);

/// Renormalized computed-eigenvector quotients against the transported
/// derivatives; scheme in {N0, N1, N2, N3}. N4 is rejected (NotVerifiable).
/// Returns (right-vector sweep, left-row sweep).
std::pair<SweepResult, SweepResult> fd_verify_eigenvectors(
    const MatrixFamily& f, const SweepConfig& cfg,
    const NormalizationScheme& scheme);

struct ContourSpec {
  cxd center{0.0, 0.0};
  double radius = 0.0;
  int nodes = 64;
};

/// -(1/2 pi i) \oint R(zeta; A) dzeta by the trapezoid rule on the circle;
/// spectrally accurate when no eigenvalue approaches the contour.
Mat projector_via_contour(const Mat& a, const ContourSpec& spec);

/// Eigenvalue count inside the disk via -(1/2 pi i) \oint tr R(zeta) dzeta.
int count_eigs_in_disk(const Mat& a, const ContourSpec& spec);

struct ExponentFit {
  std::string quantity;
  double fitted_exponent = 0.0;
  double fit_residual = 0.0; // rms log-space residual
  std::vector<double> tau_grid;
  std::vector<double> values;
};

struct DefectiveDemoResult {
  std::vector<ExponentFit> fits;      // eigenvalue modulus and chi exponents
  std::string tau0_failure_class;     // error class raised at tau = 0
};

/// Splitting-exponent demos on the two hard-coded defective families:
/// example 1 is [[0,1],[tau,0]] (Jordan block at tau=0), example 2 is
/// [[0,tau],[tau^2,0]] (semisimple zero matrix at tau=0).
DefectiveDemoResult defective_demo(int example_id,
                                   const std::vector<double>& tau_grid);

/// The hard-coded demo families, exposed for reuse in reports and tests.
MatrixFamily defective_example_family(int example_id);

/// Least-squares slope of log(y) against log(x); helper shared with reports.
std::pair<double, double> fit_loglog(const std::vector<double>& xs,
                                     const std::vector<double>& ys);

} // namespace eigpert

#endif
