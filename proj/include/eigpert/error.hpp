// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef EIGPERT_ERROR_HPP
#define EIGPERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eigpert {

/// Failure taxonomy for the whole library. Every throw site uses Error with
/// one of these classes so callers (and the CLI exit-code mapping) can react
/// to the class rather than parse message strings.
enum class ErrorClass {
  ParseError,          // malformed input document or flag
  NonFinite,           // NaN/Inf rejected at construction
  DimensionMismatch,
  NotSquare,
  NonConvergence,      // eigensolver/Schur iteration cap exceeded
  SingularToTolerance, // linear solve pivot below threshold
  NotSimple,           // selected eigenvalue gap below simplicity tolerance
  PairingAmbiguous,    // left/right eigenvalue pairing not unique
  NearOrthogonalPair,  // |y*x| ~ 0, defective signature
  SingularDecoupling,  // (lambda0 I - T22) singular; contradicts simplicity
  ReorderFailure,      // Schur reordering could not front the target
  EvaluatorFailure,    // sampled family callback raised
  BranchCutViolation,  // square-root argument too close to the cut
  PinnedEntryZero,     // normalization 1/2 pinned entry ~ 0
  IsotropicVector,     // normalization 3 with x0^T x0 ~ 0
  AmbiguousSign,       // sign-consistency reference entry degenerate
  MatchingFailure,     // no unique nearby eigenvalue in an FD step
  ResolventBreakdown,  // contour node hit the spectrum
  NonIntegerResult,    // contour count too far from an integer
  NotVerifiable,       // normalization 4 passed to a verifier
  InvalidArgument,     // generic precondition violation
};

const char* error_class_name(ErrorClass c);

/// CLI exit-code taxonomy: 2 parse, 3 not-simple, 4 numerical, 5 scheme.
int exit_code_for(ErrorClass c);

class Error : public std::runtime_error {
public:
  Error(ErrorClass c, const std::string& message)
      : std::runtime_error(std::string(error_class_name(c)) + ": " + message),
        class_(c) {}

  ErrorClass error_class() const noexcept { return class_; }

private:
  ErrorClass class_;
};

[[noreturn]] inline void raise(ErrorClass c, const std::string& message) {
  throw Error(c, message);
}

} // namespace eigpert

#endif
