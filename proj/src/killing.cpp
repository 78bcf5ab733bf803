#include "liesym/killing.hpp"

#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

/// Basis of the metric-skew endomorphisms { B : gB + Bᵗg = 0 }.
std::vector<Matrix> skew_basis(const MetricLieAlgebra& a) {
  const int n = a.dim();
  const Matrix& g = a.metric();
  // Unknown B as a flat n² vector; rows are the n² entries of gB + Bᵗg.
  Matrix cond(n * n, n * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          Scalar coef;
          if (q == s) coef += g(r, p);  // (gB)_{rs} = Σ_p g_{rp} B_{ps}
          if (q == r) coef += g(p, s);  // (Bᵗg)_{rs} = Σ_p B_{pr} g_{ps}
          if (!coef.is_zero()) cond(r * n + s, p * n + q) = coef;
        }
  std::vector<Matrix> basis;
  for (const Vector& flat : kernel(cond)) {
    Matrix b(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) b(p, q) = flat[p * n + q];
    basis.push_back(std::move(b));
  }
  return basis;
}

/// Derivation action of an endomorphism on a frame tensor:
/// (B·T)(x₁,…,x_r) = B(T(x₁,…,x_r)) − Σ_s T(…, B x_s, …).
FrameTensor derivation_action(const Matrix& b, const FrameTensor& t) {
  const int n = t.dim();
  const int rank = t.rank();
  FrameTensor out(n, rank);
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  do {
    for (int l = 0; l < n; ++l) {
      Scalar s;
      for (int p = 0; p < n; ++p) {
        if (!b(l, p).is_zero()) s += b(l, p) * t.at(idx, p);
      }
      for (int slot = 0; slot < rank; ++slot) {
        std::vector<int> shifted = idx;
        const int is = idx[static_cast<std::size_t>(slot)];
        for (int p = 0; p < n; ++p) {
          const Scalar& coef = b(p, is);
          if (coef.is_zero()) continue;
          shifted[static_cast<std::size_t>(slot)] = p;
          s -= coef * t.at(shifted, l);
        }
      }
      out.at(idx, l) = s;
    }
  } while (FrameTensor::next_index(idx, n));
  return out;
}

/// Restricts a space spanned by `basis` to the annihilator of `t` under the
/// derivation action.
std::vector<Matrix> annihilator_within(const std::vector<Matrix>& basis, const FrameTensor& t) {
  if (basis.empty()) return {};
  int rows = t.dim();
  for (int r = 0; r < t.rank(); ++r) rows *= t.dim();
  Matrix cond(rows, static_cast<int>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Vector action = derivation_action(basis[col], t).vec();
    for (int r = 0; r < rows; ++r) cond(r, static_cast<int>(col)) = action[r];
  }
  std::vector<Matrix> out;
  for (const Vector& coeff : kernel(cond)) {
    Matrix b(basis.front().rows(), basis.front().cols());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      if (coeff[static_cast<int>(col)].is_zero()) continue;
      b += coeff[static_cast<int>(col)] * basis[col];
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

Matrix right_invariant_derivative(const MetricLieAlgebra& a, const Vector& v) {
  const int n = a.dim();
  if (v.dim() != n) throw invalid_input("right_invariant_derivative: dimension mismatch");
  const Scalar half(1, 2);

  // ⟨A_v X_i, X_j⟩ = −½(⟨[X_i,v],X_j⟩ + ⟨[X_i,X_j],v⟩ + ⟨[v,X_j],X_i⟩)
  Matrix pairing(n, n);
  for (int i = 0; i < n; ++i) {
    const Vector ei = Vector::basis(n, i);
    const Vector bi_v = a.bracket(ei, v);
    for (int j = 0; j < n; ++j) {
      const Vector ej = Vector::basis(n, j);
      Scalar s = a.inner(bi_v, ej);
      s += a.inner(a.bracket_basis(i, j), v);
      s += a.inner(a.bracket(v, ej), ei);
      pairing(i, j) = -half * s;
    }
  }
  // Column i of A_v solves g · (A_v e_i) = pairing-row(i).
  const Matrix& g_inv = a.metric_inverse();
  Matrix av(n, n);
  for (int i = 0; i < n; ++i) {
    const Vector col = g_inv * pairing.row(i);
    for (int l = 0; l < n; ++l) av(l, i) = col[l];
  }
  return av;
}

IsotropyAlgebra isotropy_algebra(CurvatureCache& cache) {
  const MetricLieAlgebra& a = cache.algebra();
  std::vector<Matrix> current = skew_basis(a);
  current = annihilator_within(current, cache.nabla_riemann(0));

  for (int k = 0; ; ++k) {
    if (k + 1 > cache.max_order()) {
      std::ostringstream os;
      os << "isotropy prolongation did not stabilize within " << cache.max_order()
         << " orders; the input is not a valid homogeneous metric Lie algebra";
      throw cap_exceeded(os.str());
    }
    std::vector<Matrix> next = annihilator_within(current, cache.nabla_riemann(k + 1));
    if (next.size() == current.size()) {
      IsotropyAlgebra h;
      h.basis = std::move(next);  // same space, expressed through one more condition
      h.stabilization_order = k;
      return h;
    }
    current = std::move(next);
  }
}

KillingGenerator generator_bracket(const MetricLieAlgebra& a, const FrameTensor& r,
                                   const KillingGenerator& x, const KillingGenerator& y) {
  if (x.value.dim() != a.dim() || y.value.dim() != a.dim())
    throw invalid_input("generator_bracket: dimension mismatch");
  KillingGenerator out;
  out.value = y.derivative * x.value - x.derivative * y.value;
  out.derivative = curvature_endomorphism(r, x.value, y.value) -
                   commutator(x.derivative, y.derivative);
  return out;
}

std::vector<Vector> fixed_point_set(const IsotropyAlgebra& h, int dim) {
  if (h.basis.empty()) {
    std::vector<Vector> full;
    for (int i = 0; i < dim; ++i) full.push_back(Vector::basis(dim, i));
    return full;
  }
  Matrix stacked(static_cast<int>(h.basis.size()) * dim, dim);
  for (std::size_t b = 0; b < h.basis.size(); ++b)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        stacked(static_cast<int>(b) * dim + i, j) = h.basis[b](i, j);
  return kernel(stacked);
}

SymmetryReport symmetric_subspace(const MetricLieAlgebra& a) {
  const int n = a.dim();
  CurvatureCache cache(a);
  const IsotropyAlgebra h = isotropy_algebra(cache);
  const int m = h.dim();

  std::vector<Matrix> av_basis;
  av_basis.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    av_basis.push_back(right_invariant_derivative(a, Vector::basis(n, i)));

  // Solve A_v + Σ t_j B_j = 0 over (v, t); the kernel projects injectively
  // onto the v part, which is exactly the symmetric subspace.
  Matrix system(n * n, n + m);
  for (int i = 0; i < n; ++i) {
    const Vector flat = av_basis[static_cast<std::size_t>(i)].vec();
    for (int r = 0; r < n * n; ++r) system(r, i) = flat[r];
  }
  for (int j = 0; j < m; ++j) {
    const Vector flat = h.basis[static_cast<std::size_t>(j)].vec();
    for (int r = 0; r < n * n; ++r) system(r, n + j) = flat[r];
  }

  SymmetryReport report;
  report.isotropy_dim = m;
  report.isometry_dim = n + m;
  report.stabilization_order = h.stabilization_order;
  report.flags = geometry_flags(cache);

  for (const Vector& sol : kernel(system)) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = sol[i];
    v = v.normalized();

    ParallelWitness w;
    w.value = v;
    w.right_derivative = right_invariant_derivative(a, v);  // re-derived from v
    w.isotropy_compensation = -w.right_derivative;
    report.symmetric_basis.push_back(std::move(v));
    report.witnesses.push_back(std::move(w));
  }
  report.index = static_cast<int>(report.symmetric_basis.size());
  return report;
}

}  // namespace liesym
