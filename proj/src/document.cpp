// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0

#include "eigpert/document.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "eigpert/dense_backend.hpp"

namespace eigpert {

namespace {

using njson = nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg) {
  raise(ErrorClass::ParseError, msg);
}

const njson& need(const njson& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number_from(const njson& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_fail(std::string(what) + " must be finite");
  return v;
}

Mat mat_from_json(const njson& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    parse_fail(std::string(what) + " must be an array of " +
               std::to_string(n) + " rows");
  std::vector<cxd> entries;
  entries.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      parse_fail(std::string(what) + " rows must have " + std::to_string(n) +
                 " entries");
    for (const auto& e : row) entries.push_back(complex_from_json(e));
  }
  return Mat::from_entries(n, n, std::move(entries));
}

EigenSelector selector_from_json(const njson& j) {
  const std::string mode = need(j, "mode").get<std::string>();
  if (mode == "closest")
    return EigenSelector::closest_to(complex_from_json(need(j, "target")));
  if (mode == "largest-real") return EigenSelector::largest_real();
  if (mode == "largest-modulus") return EigenSelector::largest_modulus();
  if (mode == "index") {
    const njson& idx = need(j, "index");
    if (!idx.is_number_integer() || idx.get<long long>() < 0)
      parse_fail("selector index must be a nonnegative integer");
    return EigenSelector::by_index(idx.get<std::size_t>());
  }
  parse_fail("unknown selector mode '" + mode + "'");
}

NormalizationScheme scheme_from_json(const njson& j) {
  NormalizationScheme s;
  const std::string name = need(j, "scheme").get<std::string>();
  if (name == "n0") s.kind = SchemeKind::N0;
  else if (name == "n1") s.kind = SchemeKind::N1;
  else if (name == "n2") s.kind = SchemeKind::N2;
  else if (name == "n3") s.kind = SchemeKind::N3;
  else if (name == "n4") s.kind = SchemeKind::N4RP;
  else parse_fail("unknown normalization scheme '" + name + "'");
  if (j.contains("pin_j")) s.index_j = j.at("pin_j").get<int>();
  if (j.contains("pin_k")) s.index_k = j.at("pin_k").get<int>();
  if (j.contains("sign")) {
    const int sg = j.at("sign").get<int>();
    if (sg != 1 && sg != -1) parse_fail("sign must be +1 or -1");
    s.sign_choice = sg;
  }
  return s;
}

void append_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void dump_rec(const ojson& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (j.type()) {
    case ojson::value_t::null:
      out += "null";
      return;
    case ojson::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case ojson::value_t::number_integer: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%" PRId64, j.get<std::int64_t>());
      out += buf;
      return;
    }
    case ojson::value_t::number_unsigned: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%" PRIu64, j.get<std::uint64_t>());
      out += buf;
      return;
    }
    case ojson::value_t::number_float:
      append_number(out, j.get<double>());
      return;
    case ojson::value_t::string:
      out += njson(j.get<std::string>()).dump(); // escaped, quoted
      return;
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Numeric-ish leaves stay on one line to keep tables readable.
      bool flat = true;
      for (const auto& e : j)
        if (e.is_object() || (e.is_array() && e.size() > 2)) {
          flat = false;
          break;
        }
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) {
          out += "\n";
          out += pad_in;
        }
        dump_rec(e, out, depth + 1);
        first = false;
      }
      if (!flat) {
        out += "\n";
        out += pad;
      }
      out += "]";
      return;
    }
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",";
        out += "\n";
        out += pad_in;
        out += njson(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, depth + 1);
        first = false;
      }
      out += "\n";
      out += pad;
      out += "}";
      return;
    }
    default:
      out += "null";
      return;
  }
}

FamilyDocument parse_family_json(const njson& root) {
  if (!root.is_object()) parse_fail("document root must be an object");

  const njson& ver = need(root, "schema_version");
  if (!ver.is_number_integer() || ver.get<int>() != 1)
    parse_fail("schema_version must be the integer 1");

  const njson& dim = need(root, "dimension");
  if (!dim.is_number_integer() || dim.get<long long>() < 1)
    parse_fail("dimension must be a positive integer");
  const std::size_t n = dim.get<std::size_t>();

  const cxd tau0 = complex_from_json(need(root, "tau0"));
  const std::string kind = need(root, "kind").get<std::string>();

  FamilyDocument doc;
  try {
    if (kind == "linear") {
      Mat a0 = mat_from_json(need(root, "a0"), n, "a0");
      Mat da = mat_from_json(need(root, "delta_a"), n, "delta_a");
      doc.family = MatrixFamily::linear(std::move(a0), std::move(da), tau0);
    } else if (kind == "polynomial") {
      const njson& cs = need(root, "coefficients");
      if (!cs.is_array() || cs.empty())
        parse_fail("coefficients must be a nonempty array of matrices");
      std::vector<Mat> coeffs;
      for (std::size_t k = 0; k < cs.size(); ++k)
        coeffs.push_back(mat_from_json(
            cs[k], n, ("coefficients[" + std::to_string(k) + "]").c_str()));
      doc.family = MatrixFamily::polynomial(std::move(coeffs), tau0);
    } else if (kind == "sampled") {
      parse_fail("kind 'sampled' cannot be expressed in a document");
    } else {
      parse_fail("unknown family kind '" + kind + "'");
    }
  } catch (const Error& e) {
    if (e.error_class() == ErrorClass::ParseError) throw;
    parse_fail(e.what());
  }

  if (root.contains("selector"))
    doc.selector = selector_from_json(root.at("selector"));
  if (root.contains("normalization"))
    doc.scheme = scheme_from_json(root.at("normalization"));
  return doc;
}

} // namespace

ojson complex_to_json(cxd z) { return ojson::array({z.real(), z.imag()}); }

cxd complex_from_json(const njson& j) {
  if (!j.is_array() || j.size() != 2)
    parse_fail("complex entries must be two-element [re, im] arrays");
  return cxd{number_from(j[0], "re"), number_from(j[1], "im")};
}

ojson vec_to_json(const Vec& v) {
  ojson a = ojson::array();
  for (const cxd& z : v) a.push_back(complex_to_json(z));
  return a;
}

ojson mat_to_json(const Mat& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson selector_to_json(const EigenSelector& sel) {
  ojson j;
  switch (sel.mode) {
    case EigenSelector::Mode::ClosestTo:
      j["mode"] = "closest";
      j["target"] = complex_to_json(sel.target);
      break;
    case EigenSelector::Mode::LargestReal:
      j["mode"] = "largest-real";
      break;
    case EigenSelector::Mode::LargestModulus:
      j["mode"] = "largest-modulus";
      break;
    case EigenSelector::Mode::Index:
      j["mode"] = "index";
      j["index"] = sel.index;
      break;
  }
  return j;
}

ojson scheme_to_json(const NormalizationScheme& s) {
  ojson j;
  j["scheme"] = scheme_name(s.kind);
  if (s.index_j) j["pin_j"] = *s.index_j;
  if (s.index_k) j["pin_k"] = *s.index_k;
  if (s.sign_choice) j["sign"] = *s.sign_choice;
  return j;
}

FamilyDocument parse_family_document(const std::string& text) {
  njson root;
  try {
    root = njson::parse(text);
  } catch (const njson::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_family_json(root);
  } catch (const Error&) {
    throw;
  } catch (const njson::exception& e) {
    parse_fail(std::string("malformed document: ") + e.what());
  }
}


ojson family_document_to_json(const FamilyDocument& doc) {
  ojson j;
  j["schema_version"] = doc.schema_version;
  const MatrixFamily& f = doc.family;
  switch (f.kind()) {
    case FamilyKind::Linear:
      j["kind"] = "linear";
      break;
    case FamilyKind::Polynomial:
      j["kind"] = "polynomial";
      break;
    case FamilyKind::Sampled:
      raise(ErrorClass::InvalidArgument,
            "sampled families cannot be serialized");
  }
  j["dimension"] = f.dimension();
  j["tau0"] = complex_to_json(f.anchor());
  if (f.kind() == FamilyKind::Linear) {
    j["a0"] = mat_to_json(f.a0());
    j["delta_a"] = mat_to_json(f.delta_a());
  } else {
    ojson cs = ojson::array();
    for (const Mat& c : f.coefficients()) cs.push_back(mat_to_json(c));
    j["coefficients"] = std::move(cs);
  }
  if (doc.selector) j["selector"] = selector_to_json(*doc.selector);
  if (doc.scheme) j["normalization"] = scheme_to_json(*doc.scheme);
  return j;
}

std::string serialize_family_document(const FamilyDocument& doc) {
  return dump17(family_document_to_json(doc));
}

std::string dump17(const ojson& j) {
  std::string out;
  dump_rec(j, out, 0);
  out += "\n";
  return out;
}

ojson triple_to_json(const EigenTriple& t) {
  ojson j;
  j["lambda0"] = complex_to_json(t.lambda0);
  j["x0"] = vec_to_json(t.x0);
  j["y0"] = vec_to_json(t.y0);
  j["gap"] = t.gap;
  j["chi"] = t.chi;
  j["right_residual"] = t.right_residual;
  j["left_residual"] = t.left_residual;
  return j;
}

ojson structure_norms_to_json(const SpectralStructure& ss) {
  ojson j;
  j["kappa_x"] = ss.kappa_x;
  j["resolvent_norm"] = ss.resolvent_norm;
  j["s_norm"] = two_norm(ss.s);
  return j;
}

ojson sensitivity_to_json(const SensitivityReport& r) {
  ojson j;
  j["lambda_prime"] = complex_to_json(r.lambda_prime);
  j["lambda_prime_trace_form"] = complex_to_json(r.lambda_prime_trace_form);
  j["x_prime"] = vec_to_json(r.x_prime);
  j["ystar_prime"] = vec_to_json(r.ystar_prime);
  j["pi_prime"] = mat_to_json(r.pi_prime);
  j["bound_rhs"] = r.bound_rhs;
  j["bound_rhs_gap_form"] = r.bound_rhs_gap_form;
  j["chi_times_norm_aprime"] = r.chi_times_norm_aprime;
  return j;
}

ojson sweep_to_json(const SweepResult& r) {
  ojson j;
  j["quantity"] = r.quantity;
  j["formula_value"] = complex_to_json(r.formula_scalar);
  j["formula_norm"] = r.formula_norm;
  j["chi"] = r.chi;
  j["chi_unreliable"] = r.chi_unreliable;
  ojson recs = ojson::array();
  for (const SweepRecord& rec : r.records) {
    ojson e;
    e["step"] = rec.step;
    if (rec.dropped) {
      e["dropped"] = true;
      e["note"] = rec.note;
    } else {
      e["fd"] = complex_to_json(rec.fd_scalar);
      e["quotient_norm"] = rec.quotient_norm;
      e["abs_error"] = rec.abs_error;
      e["rel_error"] = rec.rel_error;
    }
    recs.push_back(std::move(e));
  }
  j["records"] = std::move(recs);
  j["best_step"] = r.best_step;
  j["best_error"] = r.best_error;
  j["best_abs_error"] = r.best_abs_error;
  if (r.floor_dominated) {
    j["truncation_slope"] = nullptr;
    j["floor_dominated"] = true;
  } else {
    j["truncation_slope"] = r.truncation_slope;
    j["floor_dominated"] = false;
  }
  return j;
}

ojson exponent_fit_to_json(const ExponentFit& f) {
  ojson j;
  j["quantity"] = f.quantity;
  j["fitted_exponent"] = f.fitted_exponent;
  j["fit_residual"] = f.fit_residual;
  ojson grid = ojson::array();
  for (double t : f.tau_grid) grid.push_back(t);
  j["tau_grid"] = std::move(grid);
  ojson vals = ojson::array();
  for (double v : f.values) vals.push_back(v);
  j["values"] = std::move(vals);
  return j;
}

} // namespace eigpert
