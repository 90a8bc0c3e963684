#include "gct/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gct {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  RatMatrix a(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) a(i, i) = d[i];
  return a;
}

RatMatrix RatMatrix::permutation(const std::vector<std::size_t>& perm) {
  RatMatrix a(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) a(perm[j], j) = 1;
  return a;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix c(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) c(i, j) += a * rhs(k, j);
    }
  return c;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  RatMatrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] += rhs.data_[i];
  return c;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  RatMatrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] -= rhs.data_[i];
  return c;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix c = *this;
  for (auto& v : c.data_) v *= s;
  return c;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Rational RatMatrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
  RatMatrix a = *this;
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::size_t RatMatrix::rank() const {
  RatMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t piv = r;
    while (piv < rows_ && sgn(a(piv, col)) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

}  // namespace gct
