#include "liesym/lie_algebra.hpp"

#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

std::string place(int i, int j, int k) {
  std::ostringstream os;
  os << "(i=" << i + 1 << ", j=" << j + 1 << ", k=" << k + 1 << ")";
  return os.str();
}

}  // namespace

MetricLieAlgebra::MetricLieAlgebra(int dim, FrameTensor structure, Matrix metric)
    : dim_(dim), c_(std::move(structure)), g_(std::move(metric)) {
  if (dim <= 0) throw invalid_input("algebra dimension must be positive");
  if (c_.dim() != dim || c_.rank() != 2)
    throw invalid_input("structure tensor must be rank 2 over the algebra dimension");
  if (g_.rows() != dim || g_.cols() != dim)
    throw invalid_input("metric must be a square matrix of the algebra dimension");
  if (!det(g_).is_zero()) g_inv_ = inverse(g_);
}

MetricLieAlgebra MetricLieAlgebra::from_brackets(int dim,
                                                 const std::vector<BracketEntry>& entries,
                                                 Matrix metric) {
  FrameTensor c(dim, 2);
  std::vector<bool> seen(static_cast<std::size_t>(dim) * dim * dim, false);
  auto slot = [dim](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * dim + j) * dim + k;
  };
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw invalid_input("bracket entry index out of range");
    if (e.i == e.j && !e.value.is_zero())
      throw invalid_input("bracket entry [X,X] must vanish at " + place(e.i, e.j, e.k));
    if (seen[slot(e.i, e.j, e.k)]) {
      if (c.at({e.i, e.j}, e.k) != e.value)
        throw invalid_input("conflicting bracket entries at " + place(e.i, e.j, e.k));
      continue;
    }
    if (seen[slot(e.j, e.i, e.k)] && c.at({e.j, e.i}, e.k) != -e.value)
      throw invalid_input("bracket entry conflicts with antisymmetric counterpart at " +
                          place(e.i, e.j, e.k));
    c.at({e.i, e.j}, e.k) = e.value;
    seen[slot(e.i, e.j, e.k)] = true;
    if (e.i != e.j) {
      c.at({e.j, e.i}, e.k) = -e.value;
      seen[slot(e.j, e.i, e.k)] = true;
    }
  }
  return MetricLieAlgebra(dim, std::move(c), std::move(metric));
}

const Matrix& MetricLieAlgebra::metric_inverse() const {
  if (!g_inv_) throw invalid_input("metric is singular");
  return *g_inv_;
}

Vector MetricLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) throw invalid_input("bracket dimension mismatch");
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += xy * c_.at({i, j}, k);
    }
  }
  return out;
}

Scalar MetricLieAlgebra::inner(const Vector& x, const Vector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) throw invalid_input("inner product dimension mismatch");
  Scalar out;
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) out += x[i] * g_(i, j) * y[j];
  }
  return out;
}

Matrix MetricLieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    const Vector col = bracket(x, Vector::basis(dim_, j));
    for (int i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<std::string> MetricLieAlgebra::validate() const {
  std::vector<std::string> violations;

  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c_.at({i, j}, k) != -c_.at({j, i}, k))
          violations.push_back("antisymmetry violated at " + place(i, j, k));

  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        const Vector ei = Vector::basis(dim_, i);
        const Vector ej = Vector::basis(dim_, j);
        const Vector ek = Vector::basis(dim_, k);
        const Vector jac =
            bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
            bracket(bracket(ek, ei), ej);
        if (!jac.is_zero())
          violations.push_back("Jacobi identity violated on triple " + place(i, j, k));
      }

  if (!g_.is_symmetric()) {
    violations.push_back("metric is not symmetric");
  } else if (!is_positive_definite(g_)) {
    violations.push_back("metric is not positive definite");
  }

  return violations;
}

std::vector<Vector> MetricLieAlgebra::center() const {
  // z is central iff ad_{e_i} z = -[e_i, z]... = 0 for all i; stack the maps
  // z ↦ [z, e_i].
  Matrix stacked(dim_ * dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int col = 0; col < dim_; ++col) {
      const Vector br = bracket(Vector::basis(dim_, col), Vector::basis(dim_, i));
      for (int r = 0; r < dim_; ++r) stacked(i * dim_ + r, col) = br[r];
    }
  }
  return kernel(stacked);
}

std::vector<Vector> MetricLieAlgebra::orthogonal_complement(
    const std::vector<Vector>& subspace) const {
  if (subspace.empty()) {
    std::vector<Vector> full;
    for (int i = 0; i < dim_; ++i) full.push_back(Vector::basis(dim_, i));
    return full;
  }
  Matrix pairings(static_cast<int>(subspace.size()), dim_);
  for (std::size_t r = 0; r < subspace.size(); ++r)
    for (int j = 0; j < dim_; ++j)
      pairings(static_cast<int>(r), j) = inner(subspace[r], Vector::basis(dim_, j));
  return kernel(pairings);
}

bool is_unimodular(const MetricLieAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    Scalar trace;
    for (int j = 0; j < a.dim(); ++j) trace += a.c(i, j, j);
    if (!trace.is_zero()) return false;
  }
  return true;
}

Matrix j_map(const MetricLieAlgebra& a, const Vector& z,
             const std::vector<Vector>& center_complement) {
  if (z.dim() != a.dim()) throw invalid_input("j_map: dimension mismatch");
  if (!a.ad(z).is_zero()) throw invalid_input("j_map: z is not central");

  const auto ctr = a.center();
  const int m = static_cast<int>(center_complement.size());
  if (m != a.dim() - static_cast<int>(ctr.size()))
    throw invalid_input("j_map: complement basis has wrong size");
  for (const auto& w : center_complement) {
    if (w.dim() != a.dim()) throw invalid_input("j_map: dimension mismatch");
    for (const auto& zc : ctr)
      if (!a.inner(w, zc).is_zero())
        throw invalid_input("j_map: complement basis is not orthogonal to the center");
  }

  // Gram matrix of the complement basis; independence comes out of its rank.
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      gram(i, j) = a.inner(center_complement[static_cast<std::size_t>(i)],
                           center_complement[static_cast<std::size_t>(j)]);
  Matrix gram_inv;
  try {
    gram_inv = inverse(gram);
  } catch (const invalid_input&) {
    throw invalid_input("j_map: complement basis is not linearly independent");
  }

  // ⟨j(z) v_α, v_γ⟩ = ⟨[v_α, v_γ], z⟩; solve against the restricted Gram matrix.
  Matrix pairing(m, m);
  for (int al = 0; al < m; ++al)
    for (int ga = 0; ga < m; ++ga)
      pairing(ga, al) = a.inner(a.bracket(center_complement[static_cast<std::size_t>(al)],
                                          center_complement[static_cast<std::size_t>(ga)]),
                                z);
  return gram_inv * pairing;
}

MetricLieAlgebra apply_automorphism(const MetricLieAlgebra& a, const Matrix& t) {
  if (t.rows() != a.dim() || t.cols() != a.dim())
    throw invalid_input("automorphism dimension mismatch");
  if (det(t).is_zero()) throw invalid_input("automorphism must be invertible");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      const Vector lhs = t * a.bracket_basis(i, j);
      const Vector rhs = a.bracket(t.column(i), t.column(j));
      if (!(lhs == rhs))
        throw invalid_input("map does not preserve the bracket at " + place(i, j, 0));
    }
  return MetricLieAlgebra(a.dim(), a.structure(), t.transpose() * a.metric() * t);
}

}  // namespace liesym
