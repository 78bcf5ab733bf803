#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesym/frame_tensor.hpp"
#include "liesym/linalg.hpp"

namespace liesym {

/// One structure-constant assignment [X_i, X_j] ∋ value · X_k, 0-based.
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar value;
};

/// A finite-dimensional Lie algebra with a designated inner product, given
/// by structure constants c^k_{ij} ([X_i, X_j] = Σ_k c^k_{ij} X_k) and the
/// Gram matrix g_{ij} of the frame. Models a simply connected Lie group
/// with a left-invariant metric; every geometric quantity downstream is
/// computed on this frame at the identity.
///
/// Construction does not validate; call validate() to obtain the list of
/// violated invariants (antisymmetry, Jacobi, positive-definiteness).
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(int dim, FrameTensor structure, Matrix metric);

  /// Builds the structure tensor from sparse entries, auto-filling the
  /// antisymmetric counterpart of every assignment. Conflicting duplicate
  /// entries are rejected.
  static MetricLieAlgebra from_brackets(int dim, const std::vector<BracketEntry>& entries,
                                        Matrix metric);

  int dim() const { return dim_; }
  const FrameTensor& structure() const { return c_; }
  const Matrix& metric() const { return g_; }
  const Matrix& metric_inverse() const;  // throws invalid_input when g is singular

  Scalar c(int i, int j, int k) const { return c_.at({i, j}, k); }
  Vector bracket_basis(int i, int j) const { return c_.value({i, j}); }
  Vector bracket(const Vector& x, const Vector& y) const;
  Scalar inner(const Vector& x, const Vector& y) const;
  Matrix ad(const Vector& x) const;  // y ↦ [x, y]

  /// All violated invariants, in a fixed order; empty means valid.
  std::vector<std::string> validate() const;
  bool is_valid() const { return validate().empty(); }

  /// Basis of the center { z : [z, ·] = 0 } (deterministic).
  std::vector<Vector> center() const;
  /// Basis of the metric-orthogonal complement of span(subspace).
  std::vector<Vector> orthogonal_complement(const std::vector<Vector>& subspace) const;

  friend bool operator==(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_ && a.g_ == b.g_;
  }

 private:
  int dim_;
  FrameTensor c_;  // rank 2: c^k_{ij} = c_.at({i, j}, k)
  Matrix g_;
  std::optional<Matrix> g_inv_;  // present iff g nonsingular
};

/// Trace of ad_X vanishes for every frame vector X.
bool is_unimodular(const MetricLieAlgebra& a);

/// The skew map j(z) on span(complement) defined by ⟨j(z)x, y⟩ = ⟨[x, y], z⟩.
/// `z` must be central and `center_complement` must be a basis of the
/// metric-orthogonal complement of the center.
Matrix j_map(const MetricLieAlgebra& a, const Vector& z,
             const std::vector<Vector>& center_complement);

/// Pulls the metric back along a Lie algebra automorphism t:
/// the result has the same brackets and metric g'(x, y) = g(tx, ty).
/// Throws invalid_input when t is singular or not an automorphism.
MetricLieAlgebra apply_automorphism(const MetricLieAlgebra& a, const Matrix& t);

}  // namespace liesym
