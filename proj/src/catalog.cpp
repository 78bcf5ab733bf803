#include "liesym/catalog.hpp"

#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

Matrix diag3(const Scalar& a, const Scalar& b, const Scalar& c) {
  Matrix g(3, 3);
  g(0, 0) = a;
  g(1, 1) = b;
  g(2, 2) = c;
  return g;
}

std::vector<BracketEntry> brackets_of(Group g) {
  switch (g) {
    case Group::R3:
      return {};
    case Group::SU2:
      // [X1, X2] = X3, [X2, X3] = X1, [X3, X1] = X2
      return {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}};
    case Group::SL2R:
      // [X1, X2] = 2 X3, [X1, X3] = -2 X2, [X2, X3] = -2 X1
      return {{0, 1, 2, 2}, {0, 2, 1, -2}, {1, 2, 0, -2}};
    case Group::H1:
      // [X1, X2] = X3
      return {{0, 1, 2, 1}};
    case Group::E2tilde:
      // [X1, X3] = -X2, [X2, X3] = X1
      return {{0, 2, 1, -1}, {1, 2, 0, 1}};
    case Group::E11:
      // [X1, X3] = -X1, [X2, X3] = X2
      return {{0, 2, 0, -1}, {1, 2, 1, 1}};
  }
  throw invalid_input("unknown group");
}

[[noreturn]] void reject(const std::string& what) {
  throw invalid_input("catalog parameter constraint violated: " + what);
}

MetricLieAlgebra finish(Group g, Matrix metric) {
  MetricLieAlgebra a = with_metric(g, std::move(metric));
  const auto violations = a.validate();
  if (!violations.empty()) reject(violations.front());
  return a;
}

}  // namespace

std::string group_name(Group g) {
  switch (g) {
    case Group::R3:
      return "r3";
    case Group::SU2:
      return "su2";
    case Group::SL2R:
      return "sl2r";
    case Group::H1:
      return "h1";
    case Group::E2tilde:
      return "e2tilde";
    case Group::E11:
      return "e11";
  }
  return "?";
}

std::optional<Group> group_from_name(const std::string& name) {
  if (name == "r3") return Group::R3;
  if (name == "su2") return Group::SU2;
  if (name == "sl2r") return Group::SL2R;
  if (name == "h1") return Group::H1;
  if (name == "e2tilde" || name == "e2") return Group::E2tilde;
  if (name == "e11") return Group::E11;
  return std::nullopt;
}

std::string CatalogEntry::name() const {
  std::ostringstream os;
  os << group_name(group) << " " << family;
  for (const auto& p : params) os << " " << p;
  return os.str();
}

MetricLieAlgebra with_metric(Group g, Matrix metric) {
  return MetricLieAlgebra::from_brackets(3, brackets_of(g), std::move(metric));
}

MetricLieAlgebra su2_metric(const Scalar& l, const Scalar& m, const Scalar& n) {
  if (!(l >= m && m >= n && n > Scalar(0))) reject("su2 lmn requires l >= m >= n > 0");
  return finish(Group::SU2, diag3(l, m, n));
}

MetricLieAlgebra sl2r_metric(const Scalar& l, const Scalar& m, const Scalar& n) {
  if (!(l > Scalar(0) && m >= n && n > Scalar(0)))
    reject("sl2r lmn requires l > 0 and m >= n > 0");
  return finish(Group::SL2R, diag3(l, m, n));
}

MetricLieAlgebra e2tilde_metric(const Scalar& m, const Scalar& n) {
  if (!(Scalar(0) < m && m < Scalar(1) && n > Scalar(0)))
    reject("e2tilde mn requires 0 < m < 1 and n > 0");
  return finish(Group::E2tilde, diag3(1, m, n));
}

MetricLieAlgebra e2tilde_flat(const Scalar& a, const Scalar& b) {
  if (!(a > Scalar(0) && b > Scalar(0))) reject("e2tilde flat requires a > 0 and b > 0");
  return finish(Group::E2tilde, diag3(a, a, b));
}

MetricLieAlgebra e11_nu(const Scalar& n) {
  if (!(n > Scalar(0))) reject("e11 nu requires n > 0");
  return finish(Group::E11, diag3(1, 1, n));
}

MetricLieAlgebra e11_munu(const Scalar& m, const Scalar& n) {
  if (!(m > Scalar(1) && n > Scalar(0))) reject("e11 munu requires m > 1 and n > 0");
  Matrix g = diag3(1, m, n);
  g(0, 1) = 1;
  g(1, 0) = 1;
  return finish(Group::E11, std::move(g));
}

MetricLieAlgebra h1_metric(const Matrix& g) {
  if (!(g.rows() == 3 && g.cols() == 3 && g.is_symmetric() && is_positive_definite(g)))
    reject("h1 requires a symmetric positive-definite 3x3 metric");
  return finish(Group::H1, g);
}

MetricLieAlgebra h1_standard() { return h1_metric(Matrix::identity(3)); }

MetricLieAlgebra r3_metric(const Matrix& g) {
  if (!(g.rows() == 3 && g.cols() == 3 && g.is_symmetric() && is_positive_definite(g)))
    reject("r3 requires a symmetric positive-definite 3x3 metric");
  return finish(Group::R3, g);
}

MetricLieAlgebra catalog(const CatalogEntry& entry) {
  const auto& p = entry.params;
  auto want = [&](std::size_t count) {
    if (p.size() != count) {
      std::ostringstream os;
      os << entry.name() << " expects " << count << " parameter(s), got " << p.size();
      reject(os.str());
    }
  };
  switch (entry.group) {
    case Group::SU2:
      if (entry.family != "lmn") reject("su2 has a single family: lmn");
      want(3);
      return su2_metric(p[0], p[1], p[2]);
    case Group::SL2R:
      if (entry.family != "lmn") reject("sl2r has a single family: lmn");
      want(3);
      return sl2r_metric(p[0], p[1], p[2]);
    case Group::E2tilde:
      if (entry.family == "mn") {
        want(2);
        return e2tilde_metric(p[0], p[1]);
      }
      if (entry.family == "flat") {
        want(2);
        return e2tilde_flat(p[0], p[1]);
      }
      reject("e2tilde families are: mn, flat");
    case Group::E11:
      if (entry.family == "nu") {
        want(1);
        return e11_nu(p[0]);
      }
      if (entry.family == "munu") {
        want(2);
        return e11_munu(p[0], p[1]);
      }
      reject("e11 families are: nu, munu");
    case Group::H1:
      if (entry.family == "standard") {
        want(0);
        return h1_standard();
      }
      if (entry.family == "custom") {
        if (!entry.metric) reject("h1 custom requires an explicit metric");
        return h1_metric(*entry.metric);
      }
      reject("h1 families are: standard, custom");
    case Group::R3:
      if (entry.family == "standard") {
        want(0);
        return r3_metric(Matrix::identity(3));
      }
      if (entry.family == "custom") {
        if (!entry.metric) reject("r3 custom requires an explicit metric");
        return r3_metric(*entry.metric);
      }
      reject("r3 families are: standard, custom");
  }
  reject("unknown catalog group");
}

}  // namespace liesym
