#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gct/linalg.hpp"
#include "gct/poly.hpp"

namespace gct {

enum class Subalgebra { full_gl, parabolic_P, levi_L2P, levi_LR, unipotent_UP, levi_L1P };

/// A Lie subalgebra of gl(E), E the m x m matrix space, spanned by elementary
/// matrices E_{a,b} (acting as x_a d/dx_b). S is x_{1,1} plus the lower-right
/// n x n block; S1 is the block alone; the complement holds everything else.
///
///   full-gl       all (a, b)
///   parabolic-P   all (a, b) except a outside S, b in S
///   levi-L2P      a, b in S
///   levi-LR       (x11, x11) and a, b in S1
///   unipotent-UP  a in S, b outside S
///   levi-L1P      a, b outside S
struct SubalgebraSpec {
  Subalgebra name = Subalgebra::full_gl;
  int m = 0;
  int n = 0;  // 0 only for full-gl without a padding context

  static SubalgebraSpec make(Subalgebra name, int m, int n = 0);
  /// Parses the CLI spelling ("full-gl", "parabolic-P", ...).
  static SubalgebraSpec parse(const std::string& name, int m, int n = 0);

  std::string label() const;
  VarSpace space() const { return VarSpace::full(m); }
  bool contains(std::size_t a, std::size_t b) const;
  std::vector<std::pair<std::size_t, std::size_t>> basis_pairs() const;
  std::vector<LieElement> basis() const;
  std::size_t dimension() const;
};

struct Assertion {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct IsotropyReport {
  SubalgebraSpec subalgebra;
  std::size_t kernel_dim = 0;
  std::size_t orbit_dim = 0;
  RankResult rank;
  std::vector<Assertion> assertions;
};

/// Kernel of Z -> lie_act(Z, q) over the subalgebra basis. Polynomials on an
/// S-block or S1-block space are embedded into the full space first.
IsotropyReport annihilator_dim(const Poly& q, const SubalgebraSpec& sub, const RankPolicy& policy = {});

struct QuadricRow {
  int rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t orbit_dim = 0;
};
/// x_1^2 + ... + x_r^2 on the 2 x 2 matrix space, r = 4, 3, 2, 1, 0.
std::vector<QuadricRow> quadric_orbit_dims();

enum class Star { plain, transpose };

/// Matrix of Y -> A Y* B on row-major coordinates of the m x m matrix space.
RatMatrix tau_matrix(const RatMatrix& a, const RatMatrix& b, Star star);
/// The group element whose action is q(X) -> q(A X* B).
GroupElement tau_element(const RatMatrix& a, const RatMatrix& b, Star star);
Rational tau_induced_det(const RatMatrix& a, const RatMatrix& b, Star star);

struct StabilizerVerdict {
  enum class Kind { fixes, scales, moves };
  Kind kind = Kind::moves;
  Rational factor = 0;  // act(g, q) = factor * q when kind != moves
  std::string describe() const;
};
StabilizerVerdict stabilizer_check(const Poly& q, const GroupElement& g);

/// Dimension of the space of C with the linear part (in C) of q(X + C) - q(X)
/// vanishing identically in X.
std::size_t translation_kernel_dim(const Poly& q);
/// translation_kernel_dim(perm_n); zero exactly when perm_n admits no translations.
std::size_t solve_translation_invariance(int n);

struct PaddedProfile {
  int m = 0;
  int n = 0;
  std::size_t k_full = 0, k_P = 0, k_L2P = 0, k_LR = 0;
  std::size_t dim_full = 0, dim_P = 0, dim_UP = 0, dim_L1P = 0, dim_L2P = 0, dim_LR = 0;
  std::vector<Assertion> assertions;
  bool all_hold() const;
};
PaddedProfile padded_isotropy_profile(int m, int n, const RankPolicy& policy = {});

/// act(g, p) == p for the identity, a fixed U_P transvection and `samples`
/// random elements each of U_P and L1P.
bool trivial_action_check(int m, int n, int samples, std::uint64_t seed);

}  // namespace gct
