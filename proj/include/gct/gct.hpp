#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gct/chardecomp.hpp"
#include "gct/partitions.hpp"

namespace gct {

inline constexpr std::uint64_t kDefaultSeed = 20080101;

/// Multiplicities q_mu(d) of V_{GL(S1)}(mu) in the degree-d coordinate ring
/// of the permanent orbit closure Z; mu has rank n^2.
struct QTable {
  int n = 0;
  int d = 0;
  std::map<DominantWeight, std::uint64_t> entries;
  /// "direct" for d = 1, "symmetric-square span" for d = 2.
  std::string method;
  std::uint64_t span_dim = 0;
  /// False when the span only reached a lower bound.
  bool certified = true;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// n >= 3; smaller n is computed but outside the range the results are stated for.
  bool theorem_regime = true;
};

/// Multiplicities m_lambda(d) of V_{GL(S)}(lambda), lambda of rank n^2 + 1.
struct MTable {
  int m = 0;
  int n = 0;
  int d = 0;
  std::map<DominantWeight, std::uint64_t> entries;
  /// m >= 2n, the range the theorem is stated for.
  bool theorem_regime = true;
};

struct CoordRingOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::size_t round_size = 8;
};

/// d = 1 is S^n(S1) directly; d = 2 decomposes the span of the symmetric
/// squares f (x) f, f in the GL(S1)-orbit of perm_n, inside S^2(S^n(S1*)).
QTable coord_ring_degree(int n, int d, const CoordRingOptions& options = {});

/// m_lambda(d) = sum of q_mu(d) over mu interlacing lambda, |lambda| = dm.
MTable multiplicities_6_5(const QTable& q, int m);

struct PieriCheck {
  bool holds = false;
  /// First weight where the two tables differ, or the failed identity.
  std::string witness;
  Integer lhs_dim = 0;  // sum m_lambda dim V(lambda)
  Integer rhs_dim = 0;  // dim S^{(m-n)d}(C^{n^2+1}) * sum q_mu dim V(mu padded)
  MTable pieri_table;
};
/// Recomputes the table from the Pieri expansion of S^{(m-n)d}(S) (x) C^d[Z].
PieriCheck pieri_consistency(const QTable& q, int m);
/// Checks a claimed table (normally multiplicities_6_5(q, claimed.m)) against the Pieri expansion.
PieriCheck pieri_consistency(const QTable& q, const MTable& claimed);

struct LiftedWeight {
  DominantWeight weight;  // rank m^2
  std::uint64_t mult = 0;
};
/// Highest weights of the duals V_G(lambda-hat)*: lambda followed by m^2 - n^2 - 1 zeros.
/// These are multiplicities for the normalization, not for C[Y] itself.
std::vector<LiftedWeight> lift_to_G(const MTable& table);

struct CertificateOptions {
  std::uint64_t seed = kDefaultSeed;
  BlockPolicy blocks;
  std::size_t round_size = 32;
  std::function<void(const std::string&)> progress;
};

struct CertificateReport {
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;

  std::size_t span_dim = 0;  // <R.p>, full-torus blocks, exact
  std::size_t predicted_span_dim = 0;
  bool span_certified = false;
  std::size_t samples = 0;

  // Cross-check of span_dim with coarser weight blocks and modular rank.
  std::string cross_check_grading;
  std::size_t cross_check_span_dim = 0;
  std::size_t cross_check_largest_block = 0;
  bool cross_check_primes_agree = true;
  std::vector<std::uint64_t> primes;

  std::size_t membership_checked = 0;
  bool membership_ok = true;

  std::size_t sym_dim = 0;  // dim S^m(C^{n^2+1})
  std::size_t kernel_K_dim = 0;
  std::size_t predicted_K_dim = 0;

  std::size_t lhs_count = 0;
  DominantWeight lhs_top_weight;
  bool lhs_certified = false;

  MTable rhs;
  std::string verdict;  // "obstruction-found" or "inconclusive: <reason>"

  bool obstruction() const { return verdict == "obstruction-found"; }
};

/// Degree-1 comparison behind the non-normality of the closure of R.p.
/// Requires m >= 2n and n >= 3; throws BudgetExceeded when a weight block
/// of the cross-check exceeds options.blocks.size_budget.
CertificateReport nonnormality_certificate(int m, int n, const CertificateOptions& options = {});

/// Largest weight block of the cross-check grading (x11-degree and block row degrees).
std::size_t certificate_largest_block(int m, int n);

struct OrbitDimY {
  long long value = 0;
  bool cross_checked = false;
  long long lie_value = 0;  // m^4 - k_full when cross-checked
};
/// m^2 (n^2 + 1) - 2n + 1; checked against the Lie algebra kernel when m <= max_check_m.
OrbitDimY orbit_dim_y(int m, int n, int max_check_m = 6);

}  // namespace gct
