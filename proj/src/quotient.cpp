#include "liesym/quotient.hpp"

#include "liesym/errors.hpp"

namespace liesym {

FlowNormSeries flow_norm_derivatives(const MetricLieAlgebra& a, const Vector& y, const Vector& x,
                                     int n_derivatives) {
  if (n_derivatives < 1) throw invalid_input("flow_norm_derivatives requires order >= 1");
  if (y.dim() != a.dim() || x.dim() != a.dim())
    throw invalid_input("flow_norm_derivatives: dimension mismatch");

  // u_k = (−ad_Y)^k X
  std::vector<Vector> u;
  u.reserve(static_cast<std::size_t>(n_derivatives) + 1);
  u.push_back(x);
  for (int k = 1; k <= n_derivatives; ++k) u.push_back(a.bracket(u.back(), y));

  FlowNormSeries series;
  series.derivatives.reserve(static_cast<std::size_t>(n_derivatives) + 1);
  for (int m = 0; m <= n_derivatives; ++m) {
    Scalar d;
    for (int i = 0; i <= m; ++i)
      d += binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) *
           a.inner(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(m - i)]);
    series.derivatives.push_back(std::move(d));
  }
  return series;
}

SubmersionVerdict submersion_check(const MetricLieAlgebra& a, const SymmetryReport& report,
                                   int n_derivatives) {
  if (report.index != 1)
    throw unsupported_case(
        "submersion check supports index of symmetry 1 only (got index " +
        std::to_string(report.index) + ")");
  const Vector& y = report.symmetric_basis.front();

  std::vector<Vector> horizontal = a.orthogonal_complement({y});
  std::vector<Vector> fields = horizontal;
  for (std::size_t i = 0; i < horizontal.size(); ++i)
    for (std::size_t j = i + 1; j < horizontal.size(); ++j)
      fields.push_back(horizontal[i] + horizontal[j]);

  SubmersionVerdict verdict;
  verdict.order_checked = n_derivatives;
  std::optional<int> first;
  for (const Vector& x : fields) {
    const FlowNormSeries series = flow_norm_derivatives(a, y, x, n_derivatives);
    for (int m = 1; m <= n_derivatives; ++m) {
      if (!series.derivatives[static_cast<std::size_t>(m)].is_zero()) {
        if (!first || m < *first) first = m;
        break;
      }
    }
  }
  verdict.first_nonvanishing_order = first;
  verdict.constant = !first.has_value();
  return verdict;
}

Scalar oneill_base_curvature(const MetricLieAlgebra& a, const SymmetryReport& report,
                             const Vector& x, const Vector& y) {
  for (const Vector& s : report.symmetric_basis)
    if (!a.inner(x, s).is_zero() || !a.inner(y, s).is_zero())
      throw invalid_input("O'Neill base curvature requires horizontal arguments");

  const Scalar xx = a.inner(x, x);
  const Scalar yy = a.inner(y, y);
  const Scalar xy = a.inner(x, y);
  const Scalar denom = xx * yy - xy * xy;
  if (denom.is_zero())
    throw invalid_input("O'Neill base curvature of a degenerate plane (dependent vectors)");

  CurvatureCache cache(a);
  const Scalar k = sectional_curvature(a, cache.riemann(), x, y);

  // Metric projection of [x, y] onto the symmetric subspace.
  const Vector br = a.bracket(x, y);
  Vector vertical(a.dim());
  if (!report.symmetric_basis.empty()) {
    const auto& basis = report.symmetric_basis;
    const int m = static_cast<int>(basis.size());
    Matrix gram(m, m);
    Vector rhs(m);
    for (int i = 0; i < m; ++i) {
      rhs[i] = a.inner(basis[static_cast<std::size_t>(i)], br);
      for (int j = 0; j < m; ++j)
        gram(i, j) = a.inner(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
    }
    const Vector coeff = inverse(gram) * rhs;
    for (int i = 0; i < m; ++i) vertical += coeff[i] * basis[static_cast<std::size_t>(i)];
  }

  return k + Scalar(3, 4) * a.inner(vertical, vertical) / denom;
}

}  // namespace liesym
