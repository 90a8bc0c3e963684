#include "gct/varspace.hpp"

#include "gct/errors.hpp"

namespace gct {

VarSpace VarSpace::full(int m) {
  require(m >= 1, "full space requires m >= 1");
  return VarSpace(Kind::full, m, 0, static_cast<std::size_t>(m) * m);
}

VarSpace VarSpace::s_block(int m, int n) {
  require(n >= 1 && n < m, "S-block space requires 1 <= n < m");
  return VarSpace(Kind::s_block, m, n, static_cast<std::size_t>(n) * n + 1);
}

VarSpace VarSpace::s1_block(int m, int n) {
  require(n >= 1 && n < m, "S1-block space requires 1 <= n < m");
  return VarSpace(Kind::s1_block, m, n, static_cast<std::size_t>(n) * n);
}

VarSpace VarSpace::generic(int k) {
  require(k >= 0, "generic space requires k >= 0");
  return VarSpace(Kind::generic, 0, 0, static_cast<std::size_t>(k));
}

std::pair<int, int> VarSpace::entry(std::size_t v) const {
  if (v >= size_) throw std::out_of_range("variable index out of range");
  const int off = m_ - n_;  // block rows/cols are off+1 .. m
  switch (kind_) {
    case Kind::full:
      return {static_cast<int>(v) / m_ + 1, static_cast<int>(v) % m_ + 1};
    case Kind::s_block:
      if (v == 0) return {1, 1};
      return {off + static_cast<int>(v - 1) / n_ + 1, off + static_cast<int>(v - 1) % n_ + 1};
    case Kind::s1_block:
      return {off + static_cast<int>(v) / n_ + 1, off + static_cast<int>(v) % n_ + 1};
    case Kind::generic:
      break;
  }
  throw std::logic_error("generic variables have no matrix position");
}

bool VarSpace::contains_entry(int i, int j) const {
  const int off = m_ - n_;
  switch (kind_) {
    case Kind::full:
      return i >= 1 && i <= m_ && j >= 1 && j <= m_;
    case Kind::s_block:
      if (i == 1 && j == 1) return true;
      [[fallthrough]];
    case Kind::s1_block:
      return i > off && i <= m_ && j > off && j <= m_;
    case Kind::generic:
      return false;
  }
  return false;
}

std::size_t VarSpace::index_of(int i, int j) const {
  if (!contains_entry(i, j))
    throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) + ") not in " + describe());
  const int off = m_ - n_;
  switch (kind_) {
    case Kind::full:
      return static_cast<std::size_t>((i - 1) * m_ + (j - 1));
    case Kind::s_block:
      if (i == 1 && j == 1) return 0;
      return 1 + static_cast<std::size_t>((i - off - 1) * n_ + (j - off - 1));
    case Kind::s1_block:
      return static_cast<std::size_t>((i - off - 1) * n_ + (j - off - 1));
    case Kind::generic:
      break;
  }
  throw std::logic_error("unreachable");
}

std::size_t VarSpace::full_index(std::size_t v) const {
  auto [i, j] = entry(v);
  return static_cast<std::size_t>((i - 1) * m_ + (j - 1));
}

std::string VarSpace::variable_name(std::size_t v) const {
  if (kind_ == Kind::generic) return "y" + std::to_string(v + 1);
  auto [i, j] = entry(v);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

std::string VarSpace::describe() const {
  switch (kind_) {
    case Kind::full:
      return "full(m=" + std::to_string(m_) + ")";
    case Kind::s_block:
      return "S(m=" + std::to_string(m_) + ",n=" + std::to_string(n_) + ")";
    case Kind::s1_block:
      return "S1(m=" + std::to_string(m_) + ",n=" + std::to_string(n_) + ")";
    case Kind::generic:
      return "generic(" + std::to_string(size_) + ")";
  }
  return "?";
}

}  // namespace gct
