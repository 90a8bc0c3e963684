#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>

#include "gct/errors.hpp"
#include "gct/liealg.hpp"

using namespace gct;

namespace {

SubalgebraSpec gl(int m) { return SubalgebraSpec::make(Subalgebra::full_gl, m); }

RatMatrix random_monomial_matrix(std::size_t n, Rng& rng, Rational& product) {
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  std::shuffle(sigma.begin(), sigma.end(), std::mt19937_64(rng.next()));
  static const Rational choices[] = {1, -1, 2, -2, Rational(1, 2), 3, Rational(-1, 3)};
  std::vector<Rational> d(n);
  for (auto& x : d) {
    x = choices[rng.uniform_int(0, 6)];
    product *= x;
  }
  return RatMatrix::permutation(sigma) * RatMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("subalgebra dimensions") {
  CHECK(gl(3).dimension() == 81);
  const int m = 4, n = 3;
  const std::size_t mm = 16, s = 10, perp = mm - s;
  CHECK(SubalgebraSpec::make(Subalgebra::levi_L2P, m, n).dimension() == s * s);
  CHECK(SubalgebraSpec::make(Subalgebra::levi_L1P, m, n).dimension() == perp * perp);
  CHECK(SubalgebraSpec::make(Subalgebra::unipotent_UP, m, n).dimension() == s * perp);
  CHECK(SubalgebraSpec::make(Subalgebra::parabolic_P, m, n).dimension() == mm * mm - s * perp);
  CHECK(SubalgebraSpec::make(Subalgebra::levi_LR, m, n).dimension() == 1 + 81);
  CHECK(SubalgebraSpec::parse("levi-LR", m, n).name == Subalgebra::levi_LR);
  CHECK(SubalgebraSpec::parse("unipotent-UP", m, n).label() == "unipotent-UP");
  CHECK_THROWS_AS(SubalgebraSpec::parse("borel", m, n), PreconditionError);
  CHECK_THROWS_AS(SubalgebraSpec::make(Subalgebra::parabolic_P, 4, 0), PreconditionError);
  CHECK(gl(2).basis().size() == 16);
}

TEST_CASE("determinant isotropy") {
  for (int m = 2; m <= 3; ++m) {
    const auto r = annihilator_dim(det_poly(m), gl(m));
    CHECK(r.kernel_dim == static_cast<std::size_t>(2 * (m * m - 1)));
    CHECK(r.kernel_dim + r.orbit_dim == gl(m).dimension());
    CHECK_FALSE(r.rank.modular);
  }
  CHECK(annihilator_dim(det_poly(2), gl(2)).orbit_dim == 10);
  CHECK(annihilator_dim(det_poly(3), gl(3)).orbit_dim == 65);
}

TEST_CASE("permanent isotropy") {
  CHECK(annihilator_dim(perm_poly(3), gl(3)).kernel_dim == 4);
  CHECK(annihilator_dim(perm_poly(2), gl(2)).kernel_dim == 6);  // perm_2 is a nondegenerate quadric
}

TEST_CASE("modular route gives the same kernel") {
  RankPolicy policy;
  policy.exact_entry_limit = 0;
  const auto r = annihilator_dim(det_poly(3), gl(3), policy);
  CHECK(r.rank.modular);
  CHECK(r.rank.primes_agree);
  CHECK(r.kernel_dim == 16);
}

TEST_CASE("annihilator rejects polynomials of another size") {
  CHECK_THROWS_AS(annihilator_dim(det_poly(2), gl(3)), PreconditionError);
  CHECK_THROWS_AS(annihilator_dim(padded_perm(4, 3), gl(5)), PreconditionError);
}

TEST_CASE("quadric stratification on 2x2 matrices") {
  const auto rows = quadric_orbit_dims();
  std::vector<std::size_t> kernels, orbits;
  for (const auto& r : rows) {
    kernels.push_back(r.kernel_dim);
    orbits.push_back(r.orbit_dim);
  }
  CHECK(kernels == std::vector<std::size_t>{6, 7, 9, 12, 16});
  CHECK(orbits == std::vector<std::size_t>{10, 9, 7, 4, 0});
  CHECK(rows.front().rank == 4);
  CHECK(rows.back().rank == 0);
}

TEST_CASE("determinant of the induced map") {
  const RatMatrix i2 = RatMatrix::identity(2), i3 = RatMatrix::identity(3);
  CHECK(tau_induced_det(i2, i2, Star::plain) == 1);
  CHECK(tau_induced_det(i2, i2, Star::transpose) == -1);
  CHECK(tau_induced_det(i3, i3, Star::transpose) == -1);
  CHECK_THROWS(tau_induced_det(i2, i3, Star::plain));

  Rng rng(4);
  for (int m = 2; m <= 4; ++m) {
    const auto a = random_invertible(m, rng), b = random_invertible(m, rng);
    Rational expected = 1;
    for (int k = 0; k < m; ++k) expected *= a.determinant() * b.determinant();
    CHECK(tau_induced_det(a, b, Star::plain) == expected);
    const int sign = (m * (m - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(tau_induced_det(a, b, Star::transpose) == sign * expected);
  }
}

TEST_CASE("stabilizer checks on explicit elements") {
  Rng rng(8);
  const RatMatrix i3 = RatMatrix::identity(3);
  CHECK(stabilizer_check(det_poly(3), tau_element(i3, i3, Star::transpose)).kind == StabilizerVerdict::Kind::fixes);

  const auto a = random_special_linear(2, rng), b = random_special_linear(2, rng);
  CHECK(stabilizer_check(det_poly(2), tau_element(a, b, Star::plain)).kind == StabilizerVerdict::Kind::fixes);

  const RatMatrix mu = RatMatrix::diagonal({2, 1, Rational(1, 2)});
  const RatMatrix lam = RatMatrix::permutation({2, 0, 1});
  CHECK(stabilizer_check(perm_poly(3), tau_element(lam, mu, Star::plain)).kind == StabilizerVerdict::Kind::fixes);

  const RatMatrix i2 = RatMatrix::identity(2);
  const auto s = stabilizer_check(det_poly(2), tau_element(i2.scaled(3), i2, Star::plain));
  CHECK(s.kind == StabilizerVerdict::Kind::scales);
  CHECK(s.factor == 9);
}

TEST_CASE("stabilizer generators fix and generic elements move") {
  Rng rng(1234);
  int fixes = 0, moves = 0;
  for (int t = 0; t < 50; ++t) {
    const int m = 2 + t % 2;
    const Star star = t % 3 == 0 ? Star::transpose : Star::plain;
    const auto a = random_special_linear(m, rng), b = random_special_linear(m, rng);
    fixes += stabilizer_check(det_poly(m), tau_element(a, b, star)).kind == StabilizerVerdict::Kind::fixes;

    Rational p1 = 1, p2 = 1;
    const RatMatrix l = random_monomial_matrix(3, rng, p1);
    RatMatrix r = random_monomial_matrix(3, rng, p2);
    r = r * RatMatrix::diagonal({1 / (p1 * p2), 1, 1});  // total determinant of the diagonal parts is 1
    fixes += stabilizer_check(perm_poly(3), tau_element(l, r, star)).kind == StabilizerVerdict::Kind::fixes;

    const GroupElement g(VarSpace::full(m), random_invertible(static_cast<std::size_t>(m * m), rng));
    moves += stabilizer_check(det_poly(m), g).kind == StabilizerVerdict::Kind::moves;
    const GroupElement h(VarSpace::full(3), random_invertible(9, rng));
    moves += stabilizer_check(perm_poly(3), h).kind == StabilizerVerdict::Kind::moves;
  }
  CHECK(fixes == 100);
  CHECK(moves == 100);
}

TEST_CASE("translation rigidity of the permanent") {
  for (int n = 2; n <= 4; ++n) CHECK(solve_translation_invariance(n) == 0);
  CHECK(translation_kernel_dim(Poly(VarSpace::full(3))) == 9);
  // a polynomial missing a variable admits translations in that direction
  const VarSpace e = VarSpace::full(2);
  CHECK(translation_kernel_dim(Poly::variable(e, 0) * Poly::variable(e, 1)) == 2);
  CHECK_THROWS_AS(solve_translation_invariance(1), PreconditionError);
}

TEST_CASE("padded isotropy profile") {
  const PaddedProfile p = padded_isotropy_profile(4, 3);
  CHECK(p.k_full == 101);
  CHECK(p.k_P == 101);
  CHECK(p.k_L2P == 5);
  CHECK(p.k_LR == 5);
  CHECK(p.dim_UP == 60);
  CHECK(p.dim_L1P == 36);
  CHECK(p.dim_full - p.k_full == 155);
  CHECK(p.all_hold());
  CHECK(p.assertions.size() == 4);

  const PaddedProfile q = padded_isotropy_profile(5, 3);
  CHECK(q.all_hold());
  CHECK(q.k_L2P == 5);
  CHECK(q.dim_full - q.k_full == 245);

  CHECK_THROWS_AS(padded_isotropy_profile(4, 2), PreconditionError);
  CHECK_THROWS_AS(padded_isotropy_profile(3, 3), PreconditionError);
}

TEST_CASE("U_P and L1P act trivially on p") {
  CHECK(trivial_action_check(4, 3, 5, 1));
  CHECK(trivial_action_check(5, 3, 3, 2));
  CHECK(stabilizer_check(padded_perm(4, 3), GroupElement::identity(VarSpace::s_block(4, 3))).kind ==
        StabilizerVerdict::Kind::fixes);
  // an element of L2P outside the isotropy moves p
  RatMatrix g = RatMatrix::identity(10);
  g(1, 0) = 1;
  CHECK(stabilizer_check(padded_perm(4, 3), GroupElement(VarSpace::s_block(4, 3), g)).kind ==
        StabilizerVerdict::Kind::moves);
}
