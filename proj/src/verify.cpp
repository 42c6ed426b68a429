// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "eigpert/derivatives.hpp"

namespace eigpert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Step-local failures flag the step as dropped; everything else aborts the
// sweep.
bool is_step_local(ErrorClass c) {
  switch (c) {
    case ErrorClass::NotSimple:
    case ErrorClass::PairingAmbiguous:
    case ErrorClass::NearOrthogonalPair:
    case ErrorClass::MatchingFailure:
    case ErrorClass::BranchCutViolation:
    case ErrorClass::PinnedEntryZero:
    case ErrorClass::IsotropicVector:
      return true;
    default:
      return false;
  }
}

void validate_config(const SweepConfig& cfg) {
  if (std::abs(std::abs(cfg.direction) - 1.0) > 1e-12)
    raise(ErrorClass::InvalidArgument, "sweep direction must be unimodular");
  if (cfg.steps.empty())
    raise(ErrorClass::InvalidArgument, "sweep needs at least one step");
  double prev = kInf;
  for (double h : cfg.steps) {
    if (!(h > 0.0) || h >= prev)
      raise(ErrorClass::InvalidArgument,
            "steps must be positive and strictly decreasing");
    prev = h;
  }
}

struct SweepBase {
  Mat a0;
  Mat aprime;
  EigenTriple triple;
  cxd tau0;
};

SweepBase prepare(const MatrixFamily& f, const SweepConfig& cfg) {
  SweepBase b;
  b.tau0 = f.anchor();
  auto d = f.eval_derivative(b.tau0);
  b.a0 = std::move(d.a_at);
  b.aprime = std::move(d.aprime_at);
  b.triple = extract_triple(b.a0, cfg.selector, cfg.simplicity_tol);
  return b;
}

// Unique eigenvalue of `ed` within gap/2 of lambda0; MatchingFailure else.
cxd match_eigenvalue(const EigenDecomposition& ed, cxd lambda0, double gap) {
  const double radius =
      std::isfinite(gap) ? gap / 2.0 : std::numeric_limits<double>::infinity();
  std::size_t hits = 0, best = 0;
  double best_d = kInf;
  for (std::size_t i = 0; i < ed.eigenvalues.size(); ++i) {
    double d = std::abs(ed.eigenvalues[i] - lambda0);
    if (d <= radius) ++hits;
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  if (hits != 1)
    raise(ErrorClass::MatchingFailure,
          std::to_string(hits) + " eigenvalues inside the matching radius");
  return ed.eigenvalues[best];
}

// Relative-error denominator: the formula magnitude, falling back to
// absolute error when the formula value is numerically zero.
double rel_denominator(double formula_norm, double scale) {
  const double floor = std::numeric_limits<double>::epsilon() * scale;
  return formula_norm > floor ? formula_norm : 1.0;
}

// Run `body(i)` over all ladder indices in parallel; body fills records[i].
// Step-local Error instances mark the record dropped; other exceptions are
// collected and the lowest-index one is rethrown after the loop.
template <typename Body>
void run_ladder(std::vector<SweepRecord>& records, const SweepConfig& cfg,
                Body&& body) {
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(cfg.steps.size());
  std::vector<std::exception_ptr> fatal(m);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    records[i].step = cfg.steps[i];
    try {
      body(static_cast<std::size_t>(i));
    } catch (const Error& e) {
      if (is_step_local(e.error_class())) {
        records[i].dropped = true;
        records[i].note = e.what();
      } else {
        fatal[i] = std::current_exception();
      }
    } catch (...) {
      fatal[i] = std::current_exception();
    }
  }
  for (auto& ep : fatal)
    if (ep) std::rethrow_exception(ep);
}

void finalize(SweepResult& r) {
  r.best_error = kInf;
  r.best_abs_error = kInf;
  double min_abs = kInf;
  double min_abs_step = 0.0;
  for (const auto& rec : r.records) {
    if (rec.dropped) continue;
    if (rec.abs_error < min_abs) {
      min_abs = rec.abs_error;
      min_abs_step = rec.step;
    }
    if (rec.rel_error < r.best_error) {
      r.best_error = rec.rel_error;
      r.best_abs_error = rec.abs_error;
      r.best_step = rec.step;
    }
  }

  // Pre-floor regime: the truncation-dominated side of the error minimum,
  // keeping only errors at least 1e3 x the observed floor. When the curve
  // never leaves the rounding floor there is nothing to fit.
  std::vector<double> hs, es;
  for (const auto& rec : r.records) {
    if (rec.dropped || rec.abs_error <= 0.0) continue;
    if (rec.step > min_abs_step && rec.abs_error > 1e3 * min_abs) {
      hs.push_back(rec.step);
      es.push_back(rec.abs_error);
    }
  }
  if (hs.size() < 2) {
    r.floor_dominated = true;
    r.truncation_slope = kNaN;
  } else {
    r.truncation_slope = fit_loglog(hs, es).first;
  }
  r.chi_unreliable = r.chi > kChiUnreliable;
}

} // namespace

std::vector<double> SweepConfig::default_steps() {
  std::vector<double> s;
  for (int k = 1; k <= 12; ++k) s.push_back(std::pow(10.0, -k));
  return s;
}

std::pair<double, double> fit_loglog(const std::vector<double>& xs,
                                     const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    raise(ErrorClass::InvalidArgument, "fit_loglog needs >= 2 points");
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0)
    raise(ErrorClass::InvalidArgument, "degenerate abscissae in fit");
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = ly[i] - (slope * lx[i] + intercept);
    rss += e * e;
  }
  return {slope, std::sqrt(rss / n)};
}

SweepResult fd_verify_lambda(const MatrixFamily& f, const SweepConfig& cfg) {
  validate_config(cfg);
  SweepBase b = prepare(f, cfg);
  SweepResult r;
  r.quantity = "lambda_prime";
  r.formula_scalar = lambda_derivative(b.triple, b.aprime);
  r.formula_norm = std::abs(r.formula_scalar);
  r.chi = b.triple.chi;
  r.records.resize(cfg.steps.size());

  const double denom =
      rel_denominator(r.formula_norm, b.triple.chi * two_norm(b.aprime));
  run_ladder(r.records, cfg, [&](std::size_t i) {
    const double h = cfg.steps[i];
    const cxd tau = b.tau0 + h * cfg.direction;
    const Mat at = f.eval(tau);
    const cxd matched = match_eigenvalue(eig_dense(at), b.triple.lambda0,
                                         b.triple.gap);
    const cxd fd = (matched - b.triple.lambda0) / (h * cfg.direction);
    r.records[i].fd_scalar = fd;
    r.records[i].quotient_norm = std::abs(fd);
    r.records[i].abs_error = std::abs(fd - r.formula_scalar);
    r.records[i].rel_error = r.records[i].abs_error / denom;
  });
  finalize(r);
  return r;
}

SweepResult fd_verify_projector(const MatrixFamily& f, const SweepConfig& cfg) {
  validate_config(cfg);
  SweepBase b = prepare(f, cfg);
  const SpectralStructure ss = build_structure(b.a0, b.triple);
  const Mat formula = projector_derivative(ss, b.aprime);

  SweepResult r;
  r.quantity = "pi_prime";
  r.formula_norm = frobenius_norm(formula);
  r.chi = b.triple.chi;
  r.records.resize(cfg.steps.size());

  const double denom =
      rel_denominator(r.formula_norm, b.triple.chi * two_norm(b.aprime));
  run_ladder(r.records, cfg, [&](std::size_t i) {
    const double h = cfg.steps[i];
    const cxd tau = b.tau0 + h * cfg.direction;
    const Mat at = f.eval(tau);
    const EigenDecomposition ed = eig_dense(at);
    match_eigenvalue(ed, b.triple.lambda0, b.triple.gap);
    const EigenTriple tt = extract_triple_from(
        at, ed, EigenSelector::closest_to(b.triple.lambda0),
        cfg.simplicity_tol);
    Mat fd = outer(tt.x0, tt.y0) - ss.pi0;
    fd *= cxd{1.0, 0.0} / (h * cfg.direction);
    r.records[i].quotient_norm = frobenius_norm(fd);
    r.records[i].abs_error = frobenius_norm(fd - formula);
    r.records[i].rel_error = r.records[i].abs_error / denom;
  });
  finalize(r);
  return r;
}

std::pair<SweepResult, SweepResult> fd_verify_eigenvectors(
    const MatrixFamily& f, const SweepConfig& cfg,
    const NormalizationScheme& scheme) {
  if (scheme.kind == SchemeKind::N4RP)
    raise(ErrorClass::NotVerifiable,
          "normalization 4 does not define smoothly varying computed "
          "eigenvectors");
  validate_config(cfg);
  SweepBase b = prepare(f, cfg);
  const SpectralStructure ss = build_structure(b.a0, b.triple);
  const EigvecDerivatives d = eigenvector_derivatives(ss, b.aprime);
  // Scheme misconfiguration at tau0 (pinned zero, isotropic x0) aborts here.
  const NormalizedPair ref = apply_normalization(scheme, ss, d.x_prime,
                                                 d.ystar_prime);
  const Vec x_ref = ref.x_hat;
  const Vec y_ref = ref.y_hat;
  const Vec dx_ref = *ref.x_hat_prime;
  const Vec dy_ref = *ref.y_hat_star_prime; // conjugated-row storage

  SweepResult rx, ry;
  rx.quantity = "x_hat_prime";
  ry.quantity = "y_hat_star_prime";
  rx.formula_norm = norm(dx_ref);
  ry.formula_norm = norm(dy_ref);
  rx.chi = ry.chi = b.triple.chi;
  rx.records.resize(cfg.steps.size());
  ry.records.resize(cfg.steps.size());

  const double scale = b.triple.chi * two_norm(b.aprime) * ss.resolvent_norm;
  const double denom_x = rel_denominator(rx.formula_norm, scale);
  const double denom_y = rel_denominator(ry.formula_norm, scale);

  run_ladder(rx.records, cfg, [&](std::size_t i) {
    const double h = cfg.steps[i];
    const cxd tau = b.tau0 + h * cfg.direction;
    const Mat at = f.eval(tau);
    const EigenDecomposition ed = eig_dense(at);
    match_eigenvalue(ed, b.triple.lambda0, b.triple.gap);
    const EigenTriple tt = extract_triple_from(
        at, ed, EigenSelector::closest_to(b.triple.lambda0),
        cfg.simplicity_tol);

    // yh follows the conjugated-row storage: it is the column yhat(tau),
    // whose adjoint is the normalized left row at tau.
    Vec xh, yh;
    switch (scheme.kind) {
      case SchemeKind::N0: {
        const NormalizedPair np =
            normalize0_computed(tt.x0, tt.y0, b.triple.x0, b.triple.y0);
        xh = np.x_hat;
        yh = np.y_hat;
        break;
      }
      case SchemeKind::N1: {
        const cxd cj = tt.x0[ref.used_j - 1];
        if (std::abs(cj) < 1e-8 * norm(tt.x0))
          raise(ErrorClass::PinnedEntryZero, "pinned x entry ~ 0 at step");
        const cxd yk = tt.y0[ref.used_k - 1];
        if (std::abs(yk) < 1e-8 * norm(tt.y0))
          raise(ErrorClass::PinnedEntryZero, "pinned y entry ~ 0 at step");
        xh = (cxd{1.0, 0.0} / cj) * tt.x0;
        yh = (cxd{1.0, 0.0} / yk) * tt.y0;
        break;
      }
      case SchemeKind::N2: {
        const cxd cj = tt.x0[ref.used_j - 1];
        if (std::abs(cj) < 1e-8 * norm(tt.x0))
          raise(ErrorClass::PinnedEntryZero, "pinned x entry ~ 0 at step");
        xh = (cxd{1.0, 0.0} / cj) * tt.x0;
        yh = std::conj(cj) * tt.y0;
        break;
      }
      case SchemeKind::N3: {
        const cxd t2 = bilinear(tt.x0, tt.x0);
        const double nx = norm(tt.x0);
        if (std::abs(t2) < 1e-8 * nx * nx)
          raise(ErrorClass::IsotropicVector, "x isotropic at step");
        const cxd s = std::sqrt(t2);
        Vec cand = (cxd{1.0, 0.0} / s) * tt.x0;
        const int sgn = sign_consistency(cand, x_ref, ref.used_j);
        const cxd sc{static_cast<double>(sgn), 0.0};
        xh = sc * cand;
        yh = (sc * std::conj(s)) * tt.y0;
        break;
      }
      default:
        raise(ErrorClass::NotVerifiable, "unsupported scheme in sweep");
    }

    const cxd inv = cxd{1.0, 0.0} / (h * cfg.direction);
    Vec fdx = inv * (xh - x_ref);
    Vec fdy = std::conj(inv) * (yh - y_ref);
    rx.records[i].quotient_norm = norm(fdx);
    rx.records[i].abs_error = norm(fdx - dx_ref);
    rx.records[i].rel_error = rx.records[i].abs_error / denom_x;
    ry.records[i].quotient_norm = norm(fdy);
    ry.records[i].abs_error = norm(fdy - dy_ref);
    ry.records[i].rel_error = ry.records[i].abs_error / denom_y;
  });

  // Mirror drops onto the left-vector ladder (one failure drops the step).
  for (std::size_t i = 0; i < rx.records.size(); ++i) {
    ry.records[i].step = rx.records[i].step;
    ry.records[i].dropped = rx.records[i].dropped;
    ry.records[i].note = rx.records[i].note;
  }
  finalize(rx);
  finalize(ry);
  return {rx, ry};
}

Mat projector_via_contour(const Mat& a, const ContourSpec& spec) {
  require_square(a, "projector_via_contour");
  if (spec.nodes < 8)
    raise(ErrorClass::InvalidArgument, "contour needs at least 8 nodes");
  if (!(spec.radius > 0.0))
    raise(ErrorClass::InvalidArgument, "contour radius must be positive");
  const std::size_t n = a.rows();
  const int m = spec.nodes;
  std::vector<Mat> resolvents(m);
  std::vector<std::exception_ptr> fatal(m);

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < m; ++k) {
    try {
      const double theta = kTwoPi * k / m;
      const cxd zeta = spec.center + spec.radius * std::polar(1.0, theta);
      Mat shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= zeta;
      try {
        resolvents[k] = solve_dense(shifted, Mat::identity(n));
      } catch (const Error& e) {
        if (e.error_class() == ErrorClass::SingularToTolerance)
          raise(ErrorClass::ResolventBreakdown,
                "eigenvalue on or near contour node " + std::to_string(k));
        throw;
      }
    } catch (...) {
      fatal[k] = std::current_exception();
    }
  }
  for (auto& ep : fatal)
    if (ep) std::rethrow_exception(ep);

  // Deterministic assembly: fixed node order regardless of thread count.
  Mat acc(n, n);
  for (int k = 0; k < m; ++k) {
    const double theta = kTwoPi * k / m;
    acc += std::polar(1.0, theta) * resolvents[k];
  }
  acc *= cxd{-spec.radius / m, 0.0};
  return acc;
}

int count_eigs_in_disk(const Mat& a, const ContourSpec& spec) {
  require_square(a, "count_eigs_in_disk");
  if (spec.nodes < 8)
    raise(ErrorClass::InvalidArgument, "contour needs at least 8 nodes");
  if (!(spec.radius > 0.0))
    raise(ErrorClass::InvalidArgument, "contour radius must be positive");
  const std::size_t n = a.rows();
  const int m = spec.nodes;
  std::vector<cxd> traces(m);
  std::vector<std::exception_ptr> fatal(m);

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < m; ++k) {
    try {
      const double theta = kTwoPi * k / m;
      const cxd zeta = spec.center + spec.radius * std::polar(1.0, theta);
      Mat shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= zeta;
      try {
        traces[k] = trace(solve_dense(shifted, Mat::identity(n)));
      } catch (const Error& e) {
        if (e.error_class() == ErrorClass::SingularToTolerance)
          raise(ErrorClass::ResolventBreakdown,
                "eigenvalue on or near contour node " + std::to_string(k));
        throw;
      }
    } catch (...) {
      fatal[k] = std::current_exception();
    }
  }
  for (auto& ep : fatal)
    if (ep) std::rethrow_exception(ep);

  cxd acc{0.0, 0.0};
  for (int k = 0; k < m; ++k) {
    const double theta = kTwoPi * k / m;
    acc += std::polar(1.0, theta) * traces[k];
  }
  acc *= cxd{-spec.radius / m, 0.0};

  const double rounded = std::round(acc.real());
  if (std::abs(acc - cxd{rounded, 0.0}) > 0.1)
    raise(ErrorClass::NonIntegerResult,
          "winding count " + std::to_string(acc.real()) + " + " +
              std::to_string(acc.imag()) + "i is not close to an integer");
  return static_cast<int>(rounded);
}

MatrixFamily defective_example_family(int example_id) {
  const cxd one{1.0, 0.0};
  if (example_id == 1) {
    // A(tau) = [[0,1],[tau,0]]
    Mat c0{{cxd{0, 0}, one}, {cxd{0, 0}, cxd{0, 0}}};
    Mat c1{{cxd{0, 0}, cxd{0, 0}}, {one, cxd{0, 0}}};
    return MatrixFamily::polynomial({c0, c1});
  }
  if (example_id == 2) {
    // A(tau) = [[0,tau],[tau^2,0]]
    Mat c0(2, 2);
    Mat c1{{cxd{0, 0}, one}, {cxd{0, 0}, cxd{0, 0}}};
    Mat c2{{cxd{0, 0}, cxd{0, 0}}, {one, cxd{0, 0}}};
    return MatrixFamily::polynomial({c0, c1, c2});
  }
  raise(ErrorClass::InvalidArgument, "example id must be 1 or 2");
}

DefectiveDemoResult defective_demo(int example_id,
                                   const std::vector<double>& tau_grid) {
  if (tau_grid.size() < 5)
    raise(ErrorClass::InvalidArgument, "demo grid needs at least 5 points");
  for (double t : tau_grid)
    if (!(t > 0.0) || t > 0.1)
      raise(ErrorClass::InvalidArgument, "demo grid must lie in (0, 0.1]");
  const MatrixFamily fam = defective_example_family(example_id);

  std::vector<double> moduli(tau_grid.size()), chis(tau_grid.size());
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    const Mat a = fam.eval(cxd{tau_grid[i], 0.0});
    const EigenTriple t = extract_triple(a, EigenSelector::largest_real());
    moduli[i] = std::abs(t.lambda0);
    chis[i] = t.chi;
  }

  DefectiveDemoResult out;
  {
    auto [slope, resid] = fit_loglog(tau_grid, moduli);
    out.fits.push_back(
        {"eigenvalue_modulus", slope, resid, tau_grid, moduli});
  }
  {
    auto [slope, resid] = fit_loglog(tau_grid, chis);
    out.fits.push_back({"chi", slope, resid, tau_grid, chis});
  }

  try {
    extract_triple(fam.eval(cxd{0.0, 0.0}), EigenSelector::largest_modulus());
    out.tau0_failure_class = "none";
  } catch (const Error& e) {
    out.tau0_failure_class = error_class_name(e.error_class());
  }
  return out;
}

} // namespace eigpert
