#pragma once

#include <optional>
#include <vector>

#include "liesym/frame_tensor.hpp"
#include "liesym/lie_algebra.hpp"

namespace liesym {

/// Connection coefficients from the Koszul formula on left-invariant fields:
/// 2⟨∇_X Y, Z⟩ = ⟨[X,Y],Z⟩ − ⟨[X,Z],Y⟩ − ⟨[Y,Z],X⟩.
/// Returns Γ with ∇_{X_i} X_j = Σ_l Γ(i, j; l) X_l.
FrameTensor levi_civita(const MetricLieAlgebra& a);

/// Curvature tensor with the convention
/// R(X, Y)Z = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z;
/// component R(i, j, k; l) is the X_l coefficient of R(X_i, X_j) X_k.
FrameTensor curvature(const MetricLieAlgebra& a, const FrameTensor& gamma);

/// Covariant derivative of a left-invariant tensor; the derivative slot
/// becomes the first covariant index: (∇T)(X_m; ...) = (∇_{X_m} T)(...).
FrameTensor covariant_derivative(const MetricLieAlgebra& a, const FrameTensor& gamma,
                                 const FrameTensor& t);

/// The endomorphism w ↦ R(x, y) w.
Matrix curvature_endomorphism(const FrameTensor& r, const Vector& x, const Vector& y);

/// K(x, y) = ⟨R(x,y)y, x⟩ / (|x|²|y|² − ⟨x,y⟩²); inputs must be independent.
Scalar sectional_curvature(const MetricLieAlgebra& a, const FrameTensor& r, const Vector& x,
                           const Vector& y);

struct GeometryFlags {
  bool flat = false;
  bool locally_symmetric = false;
  bool constant_curvature = false;
  std::optional<Scalar> curvature_constant;  // set iff constant_curvature
};

/// Per-algebra cache of the connection, the curvature tensor and its
/// iterated covariant derivatives. Owns a copy of the algebra, so it stays
/// valid independently of the argument's lifetime. Derivative orders are
/// memoized; the cache is intended for single-threaded use within one
/// analysis. References returned by nabla_riemann stay valid for the cache's
/// lifetime (storage is reserved up to the cap).
class CurvatureCache {
 public:
  explicit CurvatureCache(MetricLieAlgebra a);

  const MetricLieAlgebra& algebra() const { return a_; }
  const FrameTensor& gamma() const { return gamma_; }
  const FrameTensor& riemann() const { return derivs_.front(); }
  /// ∇^m R (m = 0 gives R). Orders beyond dim(dim-1)/2 + 2 raise cap_exceeded.
  const FrameTensor& nabla_riemann(int m);

  int max_order() const;

 private:
  MetricLieAlgebra a_;
  FrameTensor gamma_;
  std::vector<FrameTensor> derivs_;
};

/// Exact geometric flags: flat ⇔ R = 0, locally symmetric ⇔ ∇R = 0, constant
/// curvature ⇔ R = κ·(g ∧ g) for the κ read off the first coordinate plane.
GeometryFlags geometry_flags(CurvatureCache& cache);
GeometryFlags geometry_flags(const MetricLieAlgebra& a);

}  // namespace liesym
