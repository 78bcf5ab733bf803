#pragma once

#include <vector>

#include "liesym/curvature.hpp"
#include "liesym/lie_algebra.hpp"

namespace liesym {

/// Initial conditions (value at the identity, covariant derivative at the
/// identity) of a Killing field. The derivative is metric-skew.
struct KillingGenerator {
  Vector value;
  Matrix derivative;
};

/// (∇v*)_e for the right-invariant field v* with v*(e) = v, from the Koszul
/// formula in Killing fields with the right-invariant bracket sign. The
/// result is metric-skew and linear in v.
Matrix right_invariant_derivative(const MetricLieAlgebra& a, const Vector& v);

/// Lie algebra of the isotropy group of the full isometry group, realized as
/// metric-skew endomorphisms annihilating R, ∇R, ..., ∇^k R as derivations;
/// k is the first order at which the chain stabilizes.
struct IsotropyAlgebra {
  std::vector<Matrix> basis;
  int stabilization_order = 0;

  int dim() const { return static_cast<int>(basis.size()); }
};

IsotropyAlgebra isotropy_algebra(CurvatureCache& cache);

/// Initial conditions of the bracket of two Killing fields with initial
/// conditions (v, B) and (v', B'):  (B'v − Bv',  R_{v,v'} − [B, B']).
KillingGenerator generator_bracket(const MetricLieAlgebra& a, const FrameTensor& r,
                                   const KillingGenerator& x, const KillingGenerator& y);

/// Joint kernel of the isotropy basis: the fixed vectors of the isotropy
/// representation. The whole space when the isotropy is trivial.
std::vector<Vector> fixed_point_set(const IsotropyAlgebra& h, int dim);

/// A generator of the symmetric subspace: v together with the derivative
/// A_v of its right-invariant field and the compensating isotropy element
/// −A_v. The Killing field v* + W (W the isotropy field with derivative
/// −A_v at e) is parallel at the identity.
struct ParallelWitness {
  Vector value;
  Matrix right_derivative;       // A_v, lies in the isotropy algebra
  Matrix isotropy_compensation;  // −A_v
};

struct SymmetryReport {
  int index = 0;                       // dim of the symmetric subspace
  std::vector<Vector> symmetric_basis; // scaled to first nonzero coordinate 1
  int isotropy_dim = 0;
  int isometry_dim = 0;                // dim + isotropy_dim
  int stabilization_order = 0;
  GeometryFlags flags;
  std::vector<ParallelWitness> witnesses;
  /// Everything is computed at the identity of the simply connected group;
  /// statements descend to quotients only up to covering.
  static constexpr const char* applies_to = "simply connected group (universal cover)";
};

/// The symmetric subspace s_e = { v : A_v lies in the isotropy algebra },
/// with witnesses; index of symmetry = dim s_e.
SymmetryReport symmetric_subspace(const MetricLieAlgebra& a);

}  // namespace liesym
