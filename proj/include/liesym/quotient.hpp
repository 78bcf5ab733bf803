#pragma once

#include <optional>
#include <vector>

#include "liesym/killing.hpp"

namespace liesym {

/// Taylor coefficients at t = 0 of f(t) = |Ad(exp(−tY)) X|², the squared
/// norm of the right-invariant field X* along the integral curve of Y
/// through the identity. Exact; derivatives[m] = f^(m)(0).
struct FlowNormSeries {
  std::vector<Scalar> derivatives;  // orders 0..N
  int order() const { return static_cast<int>(derivatives.size()) - 1; }
};

/// Series via u_k = (−ad_Y)^k X and f^(m)(0) = Σ_i C(m,i)⟨u_i, u_{m−i}⟩.
FlowNormSeries flow_norm_derivatives(const MetricLieAlgebra& a, const Vector& y, const Vector& x,
                                     int n_derivatives);

struct SubmersionVerdict {
  bool constant = false;
  std::optional<int> first_nonvanishing_order;  // empty iff constant up to the checked order
  int order_checked = 0;
};

/// Riemannian-submersion test for the quotient by the foliation of symmetry,
/// supported when the index of symmetry is 1. Checks constancy of |X*| along
/// the flow of the symmetric direction for every right-invariant X* with
/// X ⊥ s_e: the squared norm is quadratic in X, so it suffices to test a
/// basis of the orthogonal complement together with the pairwise sums.
/// Constancy is decided by vanishing of the first `n_derivatives` derivatives
/// (default 20): ad_Y is an n×n matrix, so f is a quasi-polynomial with at
/// most n(n+1)/2 frequency modes and 20 conditions over-determine them in
/// dimension 3.
SubmersionVerdict submersion_check(const MetricLieAlgebra& a, const SymmetryReport& report,
                                   int n_derivatives = 20);

/// Sectional curvature of the quotient surface at the identity coset, for
/// horizontal independent x, y (totally geodesic fibers):
/// K_base = K(x,y) + ¾ |[x,y]^v|² / (|x|²|y|² − ⟨x,y⟩²)
/// where [·,·]^v is the metric projection onto the symmetric subspace.
Scalar oneill_base_curvature(const MetricLieAlgebra& a, const SymmetryReport& report,
                             const Vector& x, const Vector& y);

}  // namespace liesym
