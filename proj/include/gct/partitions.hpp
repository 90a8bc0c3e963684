#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gct/rational.hpp"

namespace gct {

/// Weakly decreasing integer vector of fixed rank; indexes irreducible
/// GL(k)-modules. Trailing zeros are significant: (1,0) and (1,0,0) differ.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t rank() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// |lambda|, the sum of the parts.
  int size() const;

  /// Comma-joined parts, e.g. "3,0,0".
  std::string key() const;

  auto operator<=>(const DominantWeight&) const = default;

 protected:
  std::vector<int> parts_;
};

/// Dominant weight with all parts nonnegative.
class Partition : public DominantWeight {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// Pads with zeros (or checks trailing zeros) to reach rank k.
  Partition padded(std::size_t k) const;
};

bool is_dominant(const std::vector<int>& parts);

/// True iff lam_i >= mu_i >= lam_{i+1} for all i; ranks must differ by one.
bool interlaces(const DominantWeight& mu, const DominantWeight& lam);

/// Weyl dimension formula for GL(k); k must equal rank(lam).
Integer weyl_dim(const DominantWeight& lam, std::size_t k);
Integer weyl_dim(const DominantWeight& lam);

/// dim S^d(C^k).
Integer sym_power_dim(int d, int k);

/// All mu of rank k-1 interlacing lam, lexicographically descending.
std::vector<DominantWeight> branch(const DominantWeight& lam);

/// All lam of rank N with lam / mu a horizontal strip of `boxes` boxes,
/// lexicographically descending (row Pieri rule for S^boxes(C^N) (x) V(mu)).
std::vector<Partition> pieri_row(const Partition& mu, int boxes, std::size_t N);

/// Prepends m^2 - n^2 - 1 zeros to a rank n^2 + 1 weight with lam_1 <= 0.
DominantWeight hat_lift(const DominantWeight& lam, int m, int n);

/// Highest weight of the dual module: negate and reverse.
DominantWeight dualize(const DominantWeight& lam);

/// Partitions of `total` with at most k parts, as rank-k weights, lexicographically descending.
std::vector<Partition> partitions_of(int total, std::size_t k);

}  // namespace gct
