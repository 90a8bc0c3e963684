#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gct/rational.hpp"

namespace gct {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const std::vector<Rational>& d);
  /// Permutation matrix sending basis vector j to basis vector perm[j].
  static RatMatrix permutation(const std::vector<std::size_t>& perm);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& c) const;
  bool operator==(const RatMatrix& rhs) const;

  Rational determinant() const;
  std::size_t rank() const;
  bool invertible() const { return square() && determinant() != 0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Commutator AB - BA.
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

}  // namespace gct
