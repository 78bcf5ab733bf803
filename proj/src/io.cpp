#include "liesym/io.hpp"

#include <cstdint>
#include <sstream>

#include "liesym/errors.hpp"
#include "liesym/version.hpp"

namespace liesym {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw invalid_input("algebra document: " + what); }

/// Rational field: string with the strict grammar, or a JSON integer.
/// Binary floats are rejected by design.
Scalar parse_rational(const json& v, const std::string& where) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_float())
    fail("floating-point value at " + where + " (rationals must be strings like \"2/3\")");
  fail("expected a rational at " + where);
}

int parse_index(const json& v, int dim, const std::string& where) {
  if (!v.is_number_integer()) fail("expected a 1-based index at " + where);
  const auto i = v.get<std::int64_t>();
  if (i < 1 || i > dim) fail("index out of range at " + where);
  return static_cast<int>(i - 1);
}

json rational_str(const Scalar& s) { return json(s.str()); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(rational_str(v[i]));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

AlgebraDocument parse_algebra_document(const json& doc) {
  if (!doc.is_object()) fail("top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "dimension" && key != "brackets" && key != "metric")
      fail("unknown field \"" + key + "\"");
  }
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    fail("missing integer field \"dimension\"");
  const auto dim64 = doc["dimension"].get<std::int64_t>();
  if (dim64 < 1 || dim64 > 16) fail("dimension must be between 1 and 16");
  const int n = static_cast<int>(dim64);

  std::vector<BracketEntry> entries;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) fail("\"brackets\" must be an array");
    int pos = 0;
    for (const auto& e : doc["brackets"]) {
      std::ostringstream where;
      where << "brackets[" << pos++ << "]";
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") ||
          !e.contains("value"))
        fail(where.str() + " must be an object with i, j, k, value");
      BracketEntry entry;
      entry.i = parse_index(e["i"], n, where.str() + ".i");
      entry.j = parse_index(e["j"], n, where.str() + ".j");
      entry.k = parse_index(e["k"], n, where.str() + ".k");
      entry.value = parse_rational(e["value"], where.str() + ".value");
      entries.push_back(std::move(entry));
    }
  }

  if (!doc.contains("metric") || !doc["metric"].is_array()) fail("missing array field \"metric\"");
  const auto& metric = doc["metric"];
  if (static_cast<int>(metric.size()) != n) fail("metric must have one row per dimension");
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    if (!metric[static_cast<std::size_t>(i)].is_array() ||
        static_cast<int>(metric[static_cast<std::size_t>(i)].size()) != n)
      fail("metric rows must have one entry per dimension");
    for (int j = 0; j < n; ++j) {
      std::ostringstream where;
      where << "metric[" << i << "][" << j << "]";
      g(i, j) = parse_rational(metric[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                               where.str());
    }
  }

  AlgebraDocument out{std::nullopt, MetricLieAlgebra::from_brackets(n, entries, std::move(g))};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  return out;
}

AlgebraDocument parse_algebra_document_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_algebra_document(doc);
}

json serialize_algebra_document(const AlgebraDocument& doc) {
  const MetricLieAlgebra& a = doc.algebra;
  json out;
  if (doc.name) out["name"] = *doc.name;
  out["dimension"] = a.dim();
  json brackets = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        const Scalar v = a.c(i, j, k);
        if (v.is_zero()) continue;
        json e;
        e["i"] = i + 1;
        e["j"] = j + 1;
        e["k"] = k + 1;
        e["value"] = rational_str(v);
        brackets.push_back(std::move(e));
      }
  out["brackets"] = std::move(brackets);
  out["metric"] = matrix_json(a.metric());
  return out;
}

std::string input_hash(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << fnv1a64(serialize_algebra_document(doc).dump());
  return os.str();
}

json build_report_document(const AlgebraDocument& input, const SymmetryReport& report,
                           const std::optional<SubmersionVerdict>& submersion,
                           const std::optional<Scalar>& base_curvature, int derivative_order) {
  json out;
  out["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  out["input"] = {{"name", input.name ? json(*input.name) : json(nullptr)},
                  {"hash", input_hash(input)},
                  {"algebra", serialize_algebra_document(input)}};
  out["unimodular"] = is_unimodular(input.algebra);
  out["applies_to"] = SymmetryReport::applies_to;

  json flags;
  flags["flat"] = report.flags.flat;
  flags["locally_symmetric"] = report.flags.locally_symmetric;
  flags["constant_curvature"] = report.flags.constant_curvature;
  flags["curvature_constant"] = report.flags.curvature_constant
                                    ? rational_str(*report.flags.curvature_constant)
                                    : json(nullptr);
  out["flags"] = std::move(flags);

  json sym;
  sym["index"] = report.index;
  sym["isotropy_dimension"] = report.isotropy_dim;
  sym["isometry_dimension"] = report.isometry_dim;
  sym["stabilization_order"] = report.stabilization_order;
  json basis = json::array();
  for (const auto& v : report.symmetric_basis) basis.push_back(vector_json(v));
  sym["symmetric_basis"] = std::move(basis);
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    json wj;
    wj["value"] = vector_json(w.value);
    wj["right_derivative"] = matrix_json(w.right_derivative);
    wj["isotropy_compensation"] = matrix_json(w.isotropy_compensation);
    witnesses.push_back(std::move(wj));
  }
  sym["witnesses"] = std::move(witnesses);
  out["symmetry"] = std::move(sym);

  if (submersion) {
    json sub;
    sub["constant"] = submersion->constant;
    sub["first_nonvanishing_order"] = submersion->first_nonvanishing_order
                                          ? json(*submersion->first_nonvanishing_order)
                                          : json(nullptr);
    sub["derivative_order"] = submersion->order_checked;
    sub["base_curvature"] = base_curvature ? rational_str(*base_curvature) : json(nullptr);
    out["submersion"] = std::move(sub);
  } else {
    out["submersion"] = nullptr;
  }
  out["parameters"] = {{"derivative_order", derivative_order}};
  return out;
}

}  // namespace liesym
