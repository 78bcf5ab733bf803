#pragma once

#include <vector>

#include "liesym/linalg.hpp"
#include "liesym/scalar.hpp"

namespace liesym {

/// Tensor over a fixed frame with `rank` covariant slots and one
/// contravariant slot, stored fully populated. Holds the connection
/// coefficients (rank 2), the curvature tensor (rank 3) and its iterated
/// covariant derivatives (rank 3 + m).
///
/// Component T(cov..., l) is the coefficient of the l-th frame vector in
/// T(X_{cov[0]}, ..., X_{cov[rank-1]}).
class FrameTensor {
 public:
  FrameTensor() = default;
  FrameTensor(int dim, int rank);

  int dim() const { return dim_; }
  int rank() const { return rank_; }

  Scalar& at(const std::vector<int>& cov, int l) { return a_[offset(cov, l)]; }
  const Scalar& at(const std::vector<int>& cov, int l) const { return a_[offset(cov, l)]; }

  /// The frame components of T(X_{cov[0]}, ..., X_{cov[rank-1]}).
  Vector value(const std::vector<int>& cov) const;

  bool is_zero() const;
  friend bool operator==(const FrameTensor& a, const FrameTensor& b) {
    return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.a_ == b.a_;
  }

  /// Row-major flattening (covariant indices vary slowest).
  Vector vec() const;

  /// Odometer over covariant multi-indices; returns false after the last one.
  static bool next_index(std::vector<int>& idx, int dim);

 private:
  std::size_t offset(const std::vector<int>& cov, int l) const;

  int dim_ = 0;
  int rank_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace liesym
