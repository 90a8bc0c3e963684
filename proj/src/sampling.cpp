#include "gct/sampling.hpp"

#include <stdexcept>

namespace gct {

RatMatrix random_int_matrix(std::size_t rows, std::size_t cols, Rng& rng, int lo, int hi) {
  RatMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform_int(lo, hi);
  return a;
}

RatMatrix random_invertible(std::size_t n, Rng& rng, int lo, int hi) {
  for (;;) {
    RatMatrix a = random_int_matrix(n, n, rng, lo, hi);
    if (a.determinant() != 0) return a;
  }
}

RatMatrix random_special_linear(std::size_t n, Rng& rng, int lo, int hi) {
  RatMatrix a = RatMatrix::identity(n);
  if (n < 2) return a;
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const int c = rng.uniform_int(lo, hi);
    // row_i += c * row_j keeps the determinant
    for (std::size_t k = 0; k < n; ++k) a(i, k) += c * a(j, k);
  }
  return a;
}

Pattern Pattern::all(std::size_t k) { return Pattern(k, std::vector<bool>(k * k, true)); }

Pattern Pattern::parabolic_r(const VarSpace& s) {
  if (s.kind() != VarSpace::Kind::s_block) throw std::invalid_argument("parabolic R lives on the S-block space");
  const std::size_t k = s.size();
  std::vector<bool> mask(k * k, false);
  // (g^t x)_v = sum_u g_{u,v} x_u: column 0 (x_{1,1}) may use every u,
  // block columns only block rows.
  for (std::size_t u = 0; u < k; ++u) mask[u * k + 0] = true;
  for (std::size_t u = 1; u < k; ++u)
    for (std::size_t v = 1; v < k; ++v) mask[u * k + v] = true;
  return Pattern(k, std::move(mask));
}

GroupSampler::GroupSampler(VarSpace space, Pattern pattern, std::uint64_t seed)
    : space_(space), pattern_(std::move(pattern)), seed_(seed), rng_(seed) {
  if (pattern_.size() != space_.size()) throw std::invalid_argument("pattern size does not match space");
  for (std::size_t u = 0; u < space_.size(); ++u)
    for (std::size_t v = 0; v < space_.size(); ++v)
      if (u != v && pattern_.allowed(u, v)) transvections_.emplace_back(u, v);
}

GroupElement GroupSampler::next() {
  const std::size_t k = space_.size();
  const std::size_t index = drawn_++;
  if (index == 0) return GroupElement::identity(space_);
  if (index - 1 < transvections_.size()) {
    RatMatrix a = RatMatrix::identity(k);
    auto [u, v] = transvections_[index - 1];
    a(u, v) = 1;
    return {space_, std::move(a)};
  }
  for (;;) {
    RatMatrix a(k, k);
    for (std::size_t u = 0; u < k; ++u)
      for (std::size_t v = 0; v < k; ++v)
        if (pattern_.allowed(u, v) || u == v) a(u, v) = rng_.uniform_int(-3, 3);
    if (a.determinant() != 0) return {space_, std::move(a)};
  }
}

}  // namespace gct
