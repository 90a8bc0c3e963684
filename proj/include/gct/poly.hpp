#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gct/matrix.hpp"
#include "gct/rational.hpp"
#include "gct/varspace.hpp"

namespace gct {

/// Exponent vector, one entry per variable of the owning VarSpace.
using Exponent = std::vector<std::uint8_t>;

int total_degree(const Exponent& e);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by exponent vector; a zero coefficient is
/// never stored, so the zero polynomial is the empty map.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Poly(VarSpace space) : space_(space) {}

  static Poly constant(VarSpace space, const Rational& c);
  static Poly variable(VarSpace space, std::size_t v);
  static Poly monomial(VarSpace space, Exponent e, const Rational& c = 1);

  const VarSpace& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Degree queries; the zero polynomial has no degree and throws.
  int max_degree() const;
  int min_degree() const;
  bool is_homogeneous() const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned k) const;
  bool operator==(const Poly& rhs) const;

  Poly derivative(std::size_t v) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces variable v by images[v]; all images must share one space,
  /// which becomes the space of the result.
  Poly substitute(const std::vector<Poly>& images) const;

  /// Same polynomial viewed in a larger matrix space (by matrix entry).
  Poly embedded(const VarSpace& target) const;

  /// One term per line: "num/den e_1 e_2 ... e_k", ascending exponent order.
  std::string to_text() const;
  static Poly from_text(VarSpace space, const std::string& text);

 private:
  void check_space(const Poly& rhs) const;

  VarSpace space_;
  Terms terms_;
};

/// Square rational matrix acting on the variables of `space`.
struct GroupElement {
  GroupElement(VarSpace s, RatMatrix mat);
  static GroupElement identity(VarSpace s);

  VarSpace space;
  RatMatrix matrix;
};

/// Infinitesimal counterpart of GroupElement; any square matrix of the right size.
struct LieElement {
  LieElement(VarSpace s, RatMatrix mat);
  /// Elementary matrix E_{a,b}.
  static LieElement elementary(VarSpace s, std::size_t a, std::size_t b);

  VarSpace space;
  RatMatrix matrix;
};

Poly det_poly(int m);
Poly perm_poly(int n);
/// x_{1,1}^{m-n} * perm(lower-right n x n block), on VarSpace::s_block(m, n).
Poly padded_perm(int m, int n);

/// (g . q)(x) = q(g^t x); g must be invertible.
Poly act(const GroupElement& g, const Poly& q);
/// d/dt at t = 0 of act(exp(tZ), q) = sum_{u,v} Z_{u,v} x_u dq/dx_v.
Poly lie_act(const LieElement& z, const Poly& q);

Rational evaluate(const Poly& q, std::span<const Rational> point);

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code updates.
Rational permanent_ryser(const RatMatrix& a);
/// Permanent by summing over all permutations; reference path.
Rational permanent_naive(const RatMatrix& a);
/// Row-major entries of a matrix, the evaluation point for full-space polynomials.
std::vector<Rational> flatten(const RatMatrix& a);

}  // namespace gct
