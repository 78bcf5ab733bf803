#include "liesym/curvature.hpp"

#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

FrameTensor levi_civita(const MetricLieAlgebra& a) {
  const int n = a.dim();
  const Matrix& g = a.metric();
  const Matrix& g_inv = a.metric_inverse();
  FrameTensor gamma(n, 2);
  const Scalar half(1, 2);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // rhs_k = ⟨∇_{X_i} X_j, X_k⟩ from the Koszul formula
      Vector rhs(n);
      for (int k = 0; k < n; ++k) {
        Scalar s;
        for (int l = 0; l < n; ++l) {
          s += a.c(i, j, l) * g(l, k);
          s -= a.c(i, k, l) * g(l, j);
          s -= a.c(j, k, l) * g(l, i);
        }
        rhs[k] = half * s;
      }
      const Vector coeff = g_inv * rhs;
      for (int l = 0; l < n; ++l) gamma.at({i, j}, l) = coeff[l];
    }
  }
  return gamma;
}

FrameTensor curvature(const MetricLieAlgebra& a, const FrameTensor& gamma) {
  const int n = a.dim();
  FrameTensor r(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar s;
          for (int m = 0; m < n; ++m) {
            s += gamma.at({j, k}, m) * gamma.at({i, m}, l);
            s -= gamma.at({i, k}, m) * gamma.at({j, m}, l);
            s -= a.c(i, j, m) * gamma.at({m, k}, l);
          }
          r.at({i, j, k}, l) = s;
        }
  return r;
}

FrameTensor covariant_derivative(const MetricLieAlgebra& a, const FrameTensor& gamma,
                                 const FrameTensor& t) {
  const int n = a.dim();
  const int rank = t.rank();
  FrameTensor out(n, rank + 1);

  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  do {
    for (int m = 0; m < n; ++m) {
      std::vector<int> out_idx;
      out_idx.reserve(static_cast<std::size_t>(rank) + 1);
      out_idx.push_back(m);
      out_idx.insert(out_idx.end(), idx.begin(), idx.end());

      for (int l = 0; l < n; ++l) {
        Scalar s;
        // connection acting on the contravariant slot
        for (int p = 0; p < n; ++p) s += gamma.at({m, p}, l) * t.at(idx, p);
        // minus the connection acting through every covariant slot
        for (int slot = 0; slot < rank; ++slot) {
          std::vector<int> shifted = idx;
          const int is = idx[static_cast<std::size_t>(slot)];
          for (int p = 0; p < n; ++p) {
            const Scalar& coef = gamma.at({m, is}, p);
            if (coef.is_zero()) continue;
            shifted[static_cast<std::size_t>(slot)] = p;
            s -= coef * t.at(shifted, l);
          }
          shifted[static_cast<std::size_t>(slot)] = is;
        }
        out.at(out_idx, l) = s;
      }
    }
  } while (FrameTensor::next_index(idx, n));
  return out;
}

Matrix curvature_endomorphism(const FrameTensor& r, const Vector& x, const Vector& y) {
  const int n = r.dim();
  if (r.rank() != 3) throw invalid_input("curvature endomorphism needs a rank-3 tensor");
  if (x.dim() != n || y.dim() != n) throw invalid_input("curvature endomorphism dim mismatch");
  Matrix e(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) e(l, k) += xy * r.at({i, j, k}, l);
    }
  }
  return e;
}

Scalar sectional_curvature(const MetricLieAlgebra& a, const FrameTensor& r, const Vector& x,
                           const Vector& y) {
  const Scalar xx = a.inner(x, x);
  const Scalar yy = a.inner(y, y);
  const Scalar xy = a.inner(x, y);
  const Scalar denom = xx * yy - xy * xy;
  if (denom.is_zero())
    throw invalid_input("sectional curvature of a degenerate plane (dependent vectors)");
  const Vector rxyy = curvature_endomorphism(r, x, y) * y;
  return a.inner(rxyy, x) / denom;
}

CurvatureCache::CurvatureCache(MetricLieAlgebra a)
    : a_(std::move(a)), gamma_(levi_civita(a_)) {
  derivs_.reserve(static_cast<std::size_t>(max_order()) + 1);
  derivs_.push_back(curvature(a_, gamma_));
}

int CurvatureCache::max_order() const {
  const int n = a_.dim();
  return n * (n - 1) / 2 + 2;
}

const FrameTensor& CurvatureCache::nabla_riemann(int m) {
  if (m < 0) throw invalid_input("negative derivative order");
  if (m > max_order()) {
    std::ostringstream os;
    os << "covariant derivative order " << m << " exceeds the cap " << max_order()
       << "; the input is not a valid homogeneous metric Lie algebra";
    throw cap_exceeded(os.str());
  }
  while (static_cast<int>(derivs_.size()) <= m)
    derivs_.push_back(covariant_derivative(a_, gamma_, derivs_.back()));
  return derivs_[static_cast<std::size_t>(m)];
}

GeometryFlags geometry_flags(CurvatureCache& cache) {
  const MetricLieAlgebra& a = cache.algebra();
  const int n = a.dim();
  const FrameTensor& r = cache.riemann();

  GeometryFlags flags;
  flags.flat = r.is_zero();
  flags.locally_symmetric = flags.flat || cache.nabla_riemann(1).is_zero();

  // Constant curvature: R(x,y)z = κ(⟨y,z⟩x − ⟨x,z⟩y) with κ from the first
  // coordinate plane (any plane works when the check passes).
  Scalar kappa;
  if (!flags.flat && n >= 2) {
    kappa = sectional_curvature(a, r, Vector::basis(n, 0), Vector::basis(n, 1));
  }
  bool constant = true;
  const Matrix& g = a.metric();
  for (int i = 0; i < n && constant; ++i)
    for (int j = 0; j < n && constant; ++j)
      for (int k = 0; k < n && constant; ++k)
        for (int l = 0; l < n && constant; ++l) {
          Scalar expected = kappa * (g(j, k) * Scalar(l == i ? 1 : 0) -
                                     g(i, k) * Scalar(l == j ? 1 : 0));
          if (r.at({i, j, k}, l) != expected) constant = false;
        }
  flags.constant_curvature = constant;
  if (constant) flags.curvature_constant = kappa;
  return flags;
}

GeometryFlags geometry_flags(const MetricLieAlgebra& a) {
  CurvatureCache cache(a);
  return geometry_flags(cache);
}

}  // namespace liesym
