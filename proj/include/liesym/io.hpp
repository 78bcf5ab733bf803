#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "liesym/killing.hpp"
#include "liesym/lie_algebra.hpp"
#include "liesym/quotient.hpp"

namespace liesym {

/// JSON form of a metric Lie algebra. Rationals travel as strings ("p" or
/// "p/q"); integer literals are accepted, binary floats are a parse error.
/// Bracket entries are 1-based, unspecified entries default to zero and
/// antisymmetric counterparts are filled in automatically.
struct AlgebraDocument {
  std::optional<std::string> name;
  MetricLieAlgebra algebra;
};

AlgebraDocument parse_algebra_document(const nlohmann::json& doc);
AlgebraDocument parse_algebra_document_text(const std::string& text);

/// Canonical serialization: brackets listed for i < j with nonzero value in
/// (i, j, k) order, all rationals as strings. parse ∘ serialize = identity.
nlohmann::json serialize_algebra_document(const AlgebraDocument& doc);

/// FNV-1a hash of the canonical serialization, as "fnv1a64:<hex>".
std::string input_hash(const AlgebraDocument& doc);

/// Machine-readable analysis report; deterministic for identical input.
nlohmann::json build_report_document(const AlgebraDocument& input, const SymmetryReport& report,
                                     const std::optional<SubmersionVerdict>& submersion,
                                     const std::optional<Scalar>& base_curvature,
                                     int derivative_order);

}  // namespace liesym
