#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace gct {

/// Coordinate system a polynomial lives in.
///
///   full     -- all m*m entries x_{i,j} of an m x m matrix, row-major.
///   s_block  -- x_{1,1} followed by the lower-right n x n block (row-major);
///               n*n + 1 variables. This is the space S.
///   s1_block -- the lower-right n x n block alone (the space S1); n*n variables.
///   generic  -- k unstructured variables y_1..y_k.
///
/// Matrix indices are 1-based, as in x_{i,j}; variable indices are 0-based.
class VarSpace {
 public:
  enum class Kind { full, s_block, s1_block, generic };

  static VarSpace full(int m);
  static VarSpace s_block(int m, int n);
  static VarSpace s1_block(int m, int n);
  static VarSpace generic(int k);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return size_; }

  /// Matrix position (1-based) of variable v; generic spaces have none.
  std::pair<int, int> entry(std::size_t v) const;
  /// Variable index of matrix entry (i, j); throws if the entry is not in this space.
  std::size_t index_of(int i, int j) const;
  bool contains_entry(int i, int j) const;
  /// Index of variable v inside VarSpace::full(m()).
  std::size_t full_index(std::size_t v) const;

  std::string variable_name(std::size_t v) const;
  std::string describe() const;

  bool operator==(const VarSpace& other) const = default;

 private:
  VarSpace(Kind kind, int m, int n, std::size_t size) : kind_(kind), m_(m), n_(n), size_(size) {}

  Kind kind_ = Kind::generic;
  int m_ = 0;
  int n_ = 0;
  std::size_t size_ = 0;
};

}  // namespace gct
