#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gct/poly.hpp"

namespace gct {

/// Sparse vector keyed by coordinate index.
using SparseVector = std::map<std::size_t, Rational>;

/// Incremental exact row echelon form over the rationals (sparse rows).
class RationalEchelon {
 public:
  std::size_t rank() const { return rows_.size(); }
  /// Returns true if v was independent of the stored rows.
  bool add(SparseVector v);
  bool contains(SparseVector v) const;
  /// Pivot column -> stored row (leading entry 1 at the pivot).
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  void reduce(SparseVector& v) const;
  std::map<std::size_t, SparseVector> rows_;  // pivot column -> row with leading 1
};

/// How a rank was obtained.
struct RankResult {
  std::size_t rank = 0;
  /// False for exact rational elimination. Modular ranks are lower bounds for
  /// the rational rank; when both primes agree the value is accepted as exact,
  /// with failure probability below (number of minors tested) * rank / p.
  bool modular = false;
  bool primes_agree = true;
  std::vector<std::uint64_t> primes;
};

struct RankPolicy {
  /// Matrices with more stored entries than this use the modular route.
  std::size_t exact_entry_limit = 1'000'000;
  std::uint64_t prime1 = 4611686018427387847ULL;  // largest prime below 2^62
  std::uint64_t prime2 = 4611686018427387817ULL;
};

std::size_t exact_rank(const std::vector<SparseVector>& vectors);
std::size_t modular_rank(const std::vector<SparseVector>& vectors, std::uint64_t p);
RankResult rank_with_policy(const std::vector<SparseVector>& vectors, const RankPolicy& policy);

/// Coordinates of polynomials against a shared monomial index.
std::vector<SparseVector> to_vectors(const std::vector<Poly>& polys);

}  // namespace gct
