#include "liesym/linalg.hpp"

#include <sstream>
#include <utility>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input(msg);
}

}  // namespace

bool Vector::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vector Vector::normalized() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) {
      Vector out = *this;
      out *= x.inverse();
      return out;
    }
  }
  return *this;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (int i = 0; i < out.dim(); ++i) out[i] = -out[i];
  return out;
}

Vector& Vector::operator+=(const Vector& o) {
  require(dim() == o.dim(), "vector dimension mismatch");
  for (int i = 0; i < dim(); ++i) a_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require(dim() == o.dim(), "vector dimension mismatch");
  for (int i = 0; i < dim(); ++i) a_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix Vector::as_column() const {
  Matrix m(dim(), 1);
  for (int i = 0; i < dim(); ++i) m(i, 0) = a_[static_cast<std::size_t>(i)];
  return m;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << a_[static_cast<std::size_t>(i)];
  os << "]";
  return os.str();
}

Vector Vector::basis(int dim, int i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

Matrix::Matrix(int rows, int cols, std::initializer_list<Scalar> row_major)
    : rows_(rows), cols_(cols), a_(row_major) {
  require(static_cast<int>(a_.size()) == rows * cols, "matrix initializer size mismatch");
}

std::size_t Matrix::index(int i, int j) const {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
  return static_cast<std::size_t>(i) * cols_ + j;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  require(!cols.empty(), "from_columns: empty column list");
  const int r = cols.front().dim();
  Matrix m(r, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    require(cols[static_cast<std::size_t>(j)].dim() == r, "from_columns: ragged columns");
    for (int i = 0; i < r; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  return from_columns(rows).transpose();
}

Vector Matrix::column(int j) const {
  Vector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(int i) const {
  Vector v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vector Matrix::vec() const {
  Vector v(rows_ * cols_);
  for (int i = 0; i < rows_ * cols_; ++i) v[i] = a_[static_cast<std::size_t>(i)];
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  require(m.cols() == v.dim(), "matrix-vector dimension mismatch");
  Vector out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix rref(Matrix m, std::vector<int>* pivot_cols) {
  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    int found = -1;
    for (int r = pivot_row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(found, j), m(pivot_row, j));
    const Scalar inv = m(pivot_row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (int j = col; j < m.cols(); ++j) m(r, j) -= factor * m(pivot_row, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return m;
}

int rank(const Matrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

Scalar det(const Matrix& m) {
  require(m.is_square(), "determinant of a non-square matrix");
  Matrix a = m;
  const int n = a.rows();
  Scalar result = 1;
  for (int col = 0; col < n; ++col) {
    int found = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) return 0;
    if (found != col) {
      for (int j = 0; j < n; ++j) std::swap(a(found, j), a(col, j));
      result = -result;
    }
    result *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col) * inv;
      for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return result;
}

Matrix inverse(const Matrix& m) {
  require(m.is_square(), "inverse of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return m;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots;
  Matrix red = rref(std::move(aug), &pivots);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw invalid_input("matrix is singular");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = red(i, n + j);
  return out;
}

std::vector<Vector> kernel(const Matrix& m) {
  std::vector<int> pivots;
  const Matrix red = rref(m, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -red(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_in_subspace(const Vector& target, const std::vector<Vector>& basis) {
  const int n = target.dim();
  const int m = static_cast<int>(basis.size());
  if (m == 0) {
    if (target.is_zero()) return Vector(0);
    return std::nullopt;
  }
  Matrix aug(n, m + 1);
  for (int j = 0; j < m; ++j) {
    require(basis[static_cast<std::size_t>(j)].dim() == n, "subspace basis dimension mismatch");
    for (int i = 0; i < n; ++i) aug(i, j) = basis[static_cast<std::size_t>(j)][i];
  }
  for (int i = 0; i < n; ++i) aug(i, m) = target[i];

  std::vector<int> pivots;
  const Matrix red = rref(std::move(aug), &pivots);
  Vector coeffs(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m) return std::nullopt;  // pivot in the augmented column
    coeffs[pivots[r]] = red(static_cast<int>(r), m);
  }
  return coeffs;
}

bool is_positive_definite(const Matrix& g) {
  require(g.is_square(), "positive-definiteness of a non-square matrix");
  require(g.is_symmetric(), "positive-definiteness of a non-symmetric matrix");
  for (int k = 1; k <= g.rows(); ++k) {
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (det(minor).sign() <= 0) return false;
  }
  return true;
}

}  // namespace liesym
