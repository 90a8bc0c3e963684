#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gct/poly.hpp"

namespace gct {

/// Seeded 64-bit generator; every random choice in the library goes through one.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

RatMatrix random_int_matrix(std::size_t rows, std::size_t cols, Rng& rng, int lo = -3, int hi = 3);
/// Integer matrix with entries in [lo, hi], resampled until invertible.
RatMatrix random_invertible(std::size_t n, Rng& rng, int lo = -3, int hi = 3);
/// Integer matrix of determinant exactly 1 (product of random transvections).
RatMatrix random_special_linear(std::size_t n, Rng& rng, int lo = -3, int hi = 3);

/// Which entries g_{u,v} a group element may have nonzero (diagonal always may).
class Pattern {
 public:
  static Pattern all(std::size_t k);
  /// The parabolic R on VarSpace::s_block(m, n): x_{1,1} may be replaced by any
  /// linear form in S, block variables only by forms in the block.
  static Pattern parabolic_r(const VarSpace& s_block);

  std::size_t size() const { return k_; }
  bool allowed(std::size_t u, std::size_t v) const { return mask_[u * k_ + v]; }

 private:
  Pattern(std::size_t k, std::vector<bool> mask) : k_(k), mask_(std::move(mask)) {}
  std::size_t k_;
  std::vector<bool> mask_;
};

/// Stream of invertible group elements supported on a pattern: first the
/// identity, then every elementary transvection I + E_{u,v} the pattern allows,
/// then random integer elements with entries in [-3, 3] conditioned on invertibility.
class GroupSampler {
 public:
  GroupSampler(VarSpace space, Pattern pattern, std::uint64_t seed);

  GroupElement next();
  std::uint64_t seed() const { return seed_; }
  std::size_t drawn() const { return drawn_; }

 private:
  VarSpace space_;
  Pattern pattern_;
  std::uint64_t seed_;
  Rng rng_;
  std::size_t drawn_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> transvections_;
};

}  // namespace gct
