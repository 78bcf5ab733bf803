#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "liesym/scalar.hpp"

namespace liesym {

class Matrix;

/// Dense column vector of exact rationals.
class Vector {
 public:
  Vector() = default;
  explicit Vector(int dim) : a_(static_cast<std::size_t>(dim)) {}
  Vector(std::initializer_list<Scalar> init) : a_(init) {}
  explicit Vector(std::vector<Scalar> entries) : a_(std::move(entries)) {}

  int dim() const { return static_cast<int>(a_.size()); }
  Scalar& operator[](int i) { return a_[static_cast<std::size_t>(i)]; }
  const Scalar& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// Scaled so that the first nonzero coordinate equals 1; zero stays zero.
  Vector normalized() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }

  friend bool operator==(const Vector& a, const Vector& b) { return a.a_ == b.a_; }

  Matrix as_column() const;
  std::string str() const;

  static Vector basis(int dim, int i);  // i-th standard basis vector

 private:
  std::vector<Scalar> a_;
};

/// Dense matrix of exact rationals. All operations are dimension-checked.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(int rows, int cols, std::initializer_list<Scalar> row_major);

  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix from_rows(const std::vector<Vector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(int i, int j) { return a_[index(i, j)]; }
  const Scalar& operator()(int i, int j) const { return a_[index(i, j)]; }

  Vector column(int j) const;
  Vector row(int i) const;
  /// Row-major flattening.
  Vector vec() const;

  bool is_zero() const;
  bool is_symmetric() const;
  Matrix transpose() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string str() const;

 private:
  std::size_t index(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);
Matrix commutator(const Matrix& a, const Matrix& b);  // ab - ba

/// Reduced row echelon form with deterministic pivoting: columns are
/// processed left to right and the pivot is the first nonzero entry found
/// scanning rows top to bottom. Pivot column indices are appended to
/// `pivot_cols` when given.
Matrix rref(Matrix m, std::vector<int>* pivot_cols = nullptr);

int rank(const Matrix& m);
Scalar det(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws invalid_input when singular

/// Basis of the null space { x : m x = 0 }. Deterministic: one basis vector
/// per free column in increasing column order, unit in its free coordinate.
/// Empty list for a trivial kernel.
std::vector<Vector> kernel(const Matrix& m);

/// Exact membership test of `target` in the span of `basis`. Returns the
/// coefficient vector (free coefficients set to zero, deterministic) or
/// nullopt when the target is outside the span.
std::optional<Vector> solve_in_subspace(const Vector& target, const std::vector<Vector>& basis);

/// All leading principal minors positive (Sylvester). Requires a symmetric
/// square input; throws invalid_input otherwise.
bool is_positive_definite(const Matrix& g);

}  // namespace liesym
