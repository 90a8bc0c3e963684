#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gct/linalg.hpp"
#include "gct/partitions.hpp"
#include "gct/poly.hpp"
#include "gct/sampling.hpp"

namespace gct {

using Weight = std::vector<int>;

/// Torus weight of a monomial: W * exponent for a fixed integer matrix W
/// (rank x variable count). The identity matrix gives the full diagonal torus.
class Grading {
 public:
  static Grading exponents(std::size_t k);
  /// Column v is the weight of variable v.
  static Grading columns(std::vector<Weight> variable_weights);

  std::size_t rank() const { return rank_; }
  std::size_t variables() const { return weights_.size(); }
  Weight weight(const Exponent& e) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Weight> weights_;
};

/// Finite multiset of torus weights.
class WeightCharacter {
 public:
  explicit WeightCharacter(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const std::map<Weight, std::uint64_t>& entries() const { return entries_; }
  void add(const Weight& w, std::uint64_t mult);
  std::uint64_t multiplicity(const Weight& w) const;
  /// Sum of all multiplicities, the dimension of the underlying module.
  std::uint64_t total() const;
  /// Every weight has the multiplicity of its sorted (dominant) rearrangement.
  /// Returns the first offending weight, if any.
  std::optional<Weight> symmetry_violation() const;

  /// Character of the irreducible GL(k)-module V(lam), by Gelfand-Tsetlin counts.
  static WeightCharacter irreducible(const DominantWeight& lam);
  /// Character of the span of all monomials of degree d in k variables.
  static WeightCharacter symmetric_power(int d, std::size_t k);

 private:
  std::size_t rank_;
  std::map<Weight, std::uint64_t> entries_;
};

/// Weight multiplicity of V(lam) at mu: the number of Gelfand-Tsetlin patterns
/// with top row lam and weight mu. Memoized; mu need not be dominant.
std::uint64_t kostka(const DominantWeight& lam, const Weight& mu);

struct DecompReport {
  std::size_t rank = 0;
  std::map<DominantWeight, std::uint64_t> entries;
  std::uint64_t span_dim = 0;
  bool certified = false;
  std::uint64_t seed = 0;
};

/// Peels highest weights off a character, largest (lexicographic) dominant
/// weight first. Throws ConsistencyError on non-symmetric input or when a
/// multiplicity would go negative.
DecompReport schur_decompose(const WeightCharacter& chi);

/// All exponent vectors of total degree d in k variables, lexicographically descending.
std::vector<Exponent> monomials_of_degree(std::size_t k, int d);

struct BlockPolicy {
  /// Blocks with at least this many columns use double-prime modular rank.
  std::size_t exact_block_limit = 2000;
  /// Use modular rank for every block regardless of size.
  bool force_modular = false;
  /// Largest block (in columns) the caller is willing to pay for.
  std::size_t size_budget = 4000;
  std::uint64_t prime1 = RankPolicy{}.prime1;
  std::uint64_t prime2 = RankPolicy{}.prime2;
  unsigned threads = 1;
};

/// Subspace of the degree-d homogeneous polynomials on a space, stored as
/// one row echelon form per weight block. The dimension is the sum of the
/// block ranks; for a span closed under the torus of the grading this is the
/// dimension of the span itself.
class SpanBasis {
 public:
  /// Throws BudgetExceeded when a block exceeds policy.size_budget.
  SpanBasis(VarSpace space, int degree, Grading grading, BlockPolicy policy = {});
  ~SpanBasis();
  SpanBasis(SpanBasis&&) noexcept;
  SpanBasis& operator=(SpanBasis&&) noexcept;

  const VarSpace& space() const { return space_; }
  int degree() const { return degree_; }
  const Grading& grading() const { return grading_; }
  std::size_t ambient_dim() const { return column_of_.size(); }
  std::size_t block_count() const;
  std::size_t largest_block() const;

  std::size_t dimension() const;
  /// Adds the weight components of each polynomial; returns the dimension gained.
  std::size_t add(const std::vector<Poly>& polys);
  std::size_t add(const Poly& q) { return add(std::vector<Poly>{q}); }
  /// Exact test when every touched block is exact; modular blocks test mod both primes.
  bool contains(const Poly& q) const;

  /// True when some modular block saw the two primes disagree.
  bool primes_disagree() const;
  bool uses_modular() const;

  /// Multiplicity at w = rank of the weight-w block.
  WeightCharacter character() const;
  /// Echelon rows as polynomials; only for all-exact spans.
  std::vector<Poly> basis() const;

 private:
  struct Block;

  VarSpace space_;
  int degree_;
  Grading grading_;
  BlockPolicy policy_;
  std::map<Exponent, std::pair<std::size_t, std::size_t>> column_of_;  // monomial -> (block, column)
  std::vector<Weight> block_weights_;
  std::vector<std::vector<Exponent>> block_columns_;
  std::vector<std::unique_ptr<Block>> blocks_;
};

struct OrbitSpanOptions {
  std::size_t round_size = 8;
  int stagnant_rounds = 3;
  /// A-priori upper bound; reaching it stops sampling and certifies the dimension.
  std::optional<std::size_t> upper_bound;
  std::size_t max_samples = 100000;
  /// Workers evaluating the samples of one round (0 = all cores).
  unsigned threads = 1;
  /// Called with each sample before it is added (e.g. for membership checks).
  std::function<void(const Poly&)> on_sample;
  /// Maps act(g, f) into the polynomial space of the span (identity when empty).
  std::function<Poly(const Poly&)> transform;
};

struct OrbitSpan {
  SpanBasis span;
  std::size_t samples = 0;
  /// Dimension met the upper bound; otherwise it is only a lower bound.
  bool certified = false;
};

/// Span of act(g, f) over sampled g, grown in rounds until the upper bound is
/// met or `stagnant_rounds` consecutive rounds add nothing.
OrbitSpan orbit_span(const Poly& f, GroupSampler& sampler, SpanBasis span, const OrbitSpanOptions& options = {});
/// Same with the full-torus grading of f's space and default blocks.
OrbitSpan orbit_span(const Poly& f, GroupSampler& sampler, const OrbitSpanOptions& options = {});

WeightCharacter weight_character(const SpanBasis& span);

/// Span dimension computed block by block under the given grading of
/// coordinates; vectors are coordinate maps and blocks[i] is the block of coordinate i.
std::size_t blocked_rank(const std::vector<SparseVector>& vectors, const std::vector<std::size_t>& blocks);

/// The linear form sum_a c_a y_a on VarSpace::generic(monomials.size()) for
/// q = sum_a c_a x^a; every monomial of q must be listed.
Poly linearize(const Poly& q, const std::vector<Exponent>& monomials);

}  // namespace gct
