#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesym/lie_algebra.hpp"

namespace liesym {

/// The six simply connected 3-dimensional unimodular Lie groups.
enum class Group { R3, SU2, SL2R, H1, E2tilde, E11 };

std::string group_name(Group g);
std::optional<Group> group_from_name(const std::string& name);

/// Selector for a catalog metric. `family` picks one of the metric families
/// of the group, `params` its rational parameters:
///   su2      "lmn"       (l, m, n) with l >= m >= n > 0,  metric diag(l, m, n)
///   sl2r     "lmn"       (l, m, n) with l > 0, m >= n > 0, metric diag(l, m, n)
///   e2tilde  "mn"        (m, n) with 0 < m < 1, n > 0,     metric diag(1, m, n)
///   e2tilde  "flat"      (a, b) with a, b > 0,             metric diag(a, a, b)
///   e11      "nu"        (n) with n > 0,                   metric diag(1, 1, n)
///   e11      "munu"      (m, n) with m > 1, n > 0,         metric [[1,1,0],[1,m,0],[0,0,n]]
///   h1       "standard"  no parameters, identity metric
///   h1       "custom"    explicit SPD metric
///   r3       "standard"  no parameters, identity metric
///   r3       "custom"    explicit SPD metric
struct CatalogEntry {
  Group group = Group::R3;
  std::string family = "standard";
  std::vector<Scalar> params;
  std::optional<Matrix> metric;  // for the "custom" families

  std::string name() const;
};

/// Brackets of the group's Lie algebra in the catalog frame.
MetricLieAlgebra with_metric(Group g, Matrix metric);

/// Validated catalog algebra; parameter-constraint violations are rejected
/// with the violated constraint named.
MetricLieAlgebra catalog(const CatalogEntry& entry);

// Convenience constructors used throughout the tests.
MetricLieAlgebra su2_metric(const Scalar& l, const Scalar& m, const Scalar& n);
MetricLieAlgebra sl2r_metric(const Scalar& l, const Scalar& m, const Scalar& n);
MetricLieAlgebra e2tilde_metric(const Scalar& m, const Scalar& n);
MetricLieAlgebra e2tilde_flat(const Scalar& a, const Scalar& b);
MetricLieAlgebra e11_nu(const Scalar& n);
MetricLieAlgebra e11_munu(const Scalar& m, const Scalar& n);
MetricLieAlgebra h1_metric(const Matrix& g);
MetricLieAlgebra h1_standard();
MetricLieAlgebra r3_metric(const Matrix& g);

}  // namespace liesym
