// Copyright (c) the eigpert developers.
// SPDX-License-Identifier: Apache-2.0
//
// Family-document ingestion and report assembly. Documents are JSON with
// complex entries encoded as two-element [re, im] arrays. Reports are
// emitted through dump17(), which prints every floating value with 17
// significant digits so binary64 values round-trip exactly and repeated
// runs produce byte-identical output.

#ifndef EIGPERT_DOCUMENT_HPP
#define EIGPERT_DOCUMENT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "eigpert/derivatives.hpp"
#include "eigpert/normalization.hpp"
#include "eigpert/verify.hpp"

namespace eigpert {

using ojson = nlohmann::ordered_json;

struct FamilyDocument {
  int schema_version = 1;
  MatrixFamily family;
  std::optional<EigenSelector> selector;
  std::optional<NormalizationScheme> scheme;
};

FamilyDocument parse_family_document(const std::string& text);
ojson family_document_to_json(const FamilyDocument& doc);
std::string serialize_family_document(const FamilyDocument& doc);

/// Deterministic writer: keys in insertion order, floats at 17 significant
/// digits, nonfinite floats as null, two-space indentation.
std::string dump17(const ojson& j);

// Piecewise encoders shared by the CLI report builders.
ojson complex_to_json(cxd z);
cxd complex_from_json(const nlohmann::json& j);
ojson vec_to_json(const Vec& v);
ojson mat_to_json(const Mat& m);
ojson selector_to_json(const EigenSelector& sel);
ojson scheme_to_json(const NormalizationScheme& s);
ojson triple_to_json(const EigenTriple& t);
ojson structure_norms_to_json(const SpectralStructure& ss);
ojson sensitivity_to_json(const SensitivityReport& r);
ojson sweep_to_json(const SweepResult& r);
ojson exponent_fit_to_json(const ExponentFit& f);

} // namespace eigpert

#endif
