#include "liesym/frame_tensor.hpp"

#include "liesym/errors.hpp"

namespace liesym {

FrameTensor::FrameTensor(int dim, int rank) : dim_(dim), rank_(rank) {
  if (dim <= 0 || rank < 0) throw invalid_input("frame tensor with nonpositive dimension");
  std::size_t size = 1;
  for (int r = 0; r <= rank; ++r) size *= static_cast<std::size_t>(dim);
  a_.resize(size);
}

std::size_t FrameTensor::offset(const std::vector<int>& cov, int l) const {
  if (static_cast<int>(cov.size()) != rank_) throw invalid_input("frame tensor rank mismatch");
  std::size_t off = 0;
  for (int i : cov) {
    if (i < 0 || i >= dim_) throw invalid_input("frame tensor index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  if (l < 0 || l >= dim_) throw invalid_input("frame tensor index out of range");
  return off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(l);
}

Vector FrameTensor::value(const std::vector<int>& cov) const {
  Vector v(dim_);
  for (int l = 0; l < dim_; ++l) v[l] = at(cov, l);
  return v;
}

bool FrameTensor::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vector FrameTensor::vec() const {
  Vector v(static_cast<int>(a_.size()));
  for (std::size_t i = 0; i < a_.size(); ++i) v[static_cast<int>(i)] = a_[i];
  return v;
}

bool FrameTensor::next_index(std::vector<int>& idx, int dim) {
  for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
    if (++idx[static_cast<std::size_t>(pos)] < dim) return true;
    idx[static_cast<std::size_t>(pos)] = 0;
  }
  return false;
}

}  // namespace liesym
