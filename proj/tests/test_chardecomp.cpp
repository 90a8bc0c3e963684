#include "doctest.h"
#include "helpers.hpp"

#include "gct/chardecomp.hpp"
#include "gct/errors.hpp"

using namespace gct;

namespace {

// S^2(S^2(C^2)) as the degree-2 part of a polynomial ring in the three
// quadratic monomials, graded by their exponents.
SpanBasis veronese_square() {
  const auto quads = monomials_of_degree(2, 2);
  std::vector<Weight> cols;
  for (const auto& e : quads) cols.emplace_back(e.begin(), e.end());
  SpanBasis s(VarSpace::generic(3), 2, Grading::columns(cols));
  for (const auto& e : monomials_of_degree(3, 2)) s.add(Poly::monomial(VarSpace::generic(3), e));
  return s;
}

std::map<std::vector<int>, std::uint64_t> as_map(const DecompReport& r) {
  std::map<std::vector<int>, std::uint64_t> out;
  for (const auto& [lam, m] : r.entries) out[lam.parts()] = m;
  return out;
}

}  // namespace

TEST_CASE("monomial enumeration") {
  CHECK(monomials_of_degree(9, 3).size() == 165);
  CHECK(monomials_of_degree(10, 6).size() == 5005);
  CHECK(monomials_of_degree(3, 0).size() == 1);
  const auto two = monomials_of_degree(2, 2);
  CHECK(two.front() == Exponent{2, 0});
  CHECK(two.back() == Exponent{0, 2});
}

TEST_CASE("gradings") {
  const Grading g = Grading::exponents(3);
  CHECK(g.weight({1, 0, 2}) == Weight{1, 0, 2});
  const Grading h = Grading::columns({{1, 0}, {0, 1}, {0, 1}});
  CHECK(h.weight({1, 2, 3}) == Weight{1, 5});
  CHECK_THROWS(Grading::columns({{1, 0}, {1}}));
}

TEST_CASE("character of a full symmetric square") {
  SpanBasis s(VarSpace::generic(2), 2, Grading::exponents(2));
  for (const auto& e : monomials_of_degree(2, 2)) s.add(Poly::monomial(VarSpace::generic(2), e));
  const WeightCharacter chi = weight_character(s);
  CHECK(chi.entries() == std::map<Weight, std::uint64_t>{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(chi.total() == s.dimension());
}

TEST_CASE("decomposition of S^2(S^2(C^2))") {
  const SpanBasis s = veronese_square();
  CHECK(s.dimension() == 6);
  const DecompReport r = schur_decompose(s.character());
  CHECK(as_map(r) == std::map<std::vector<int>, std::uint64_t>{{{4, 0}, 1}, {{2, 2}, 1}});
  CHECK(r.span_dim == 6);
}

TEST_CASE("symmetric powers are irreducible") {
  for (std::size_t k = 1; k <= 10; ++k)
    for (int d = 0; d <= 6; ++d) {
      const DecompReport r = schur_decompose(WeightCharacter::symmetric_power(d, k));
      REQUIRE(r.entries.size() == 1);
      std::vector<int> top(k, 0);
      top[0] = d;
      CHECK(r.entries.begin()->first.parts() == top);
      CHECK(r.entries.begin()->second == 1);
    }
}

TEST_CASE("peeling recovers sums of irreducibles") {
  WeightCharacter chi(2);
  const WeightCharacter fundamental = WeightCharacter::irreducible(DominantWeight({1, 0}));
  for (int round = 0; round < 2; ++round)
    for (const auto& [w, m] : fundamental.entries()) chi.add(w, m);
  CHECK(as_map(schur_decompose(chi)) == std::map<std::vector<int>, std::uint64_t>{{{1, 0}, 2}});

  WeightCharacter mixed(3);
  for (const auto& lam : {DominantWeight({2, 1, 0}), DominantWeight({1, 1, 1}), DominantWeight({3, 0, -1})}) {
    const WeightCharacter irr = WeightCharacter::irreducible(lam);
    for (const auto& [w, m] : irr.entries()) mixed.add(w, m);
  }
  const auto r = schur_decompose(mixed);
  CHECK(r.entries.size() == 3);
  CHECK(r.span_dim == 8 + 1 + 24);
}

TEST_CASE("irreducible characters have the Weyl dimension") {
  for (const auto& lam : {DominantWeight({2, 1, 0}), DominantWeight({3, 1, 1, 0}), DominantWeight({2, 0, -2}),
                          DominantWeight({4, 2, 0, 0, 0})}) {
    const auto chi = WeightCharacter::irreducible(lam);
    CHECK(Integer(static_cast<unsigned long>(chi.total())) == weyl_dim(lam));
    CHECK_FALSE(chi.symmetry_violation().has_value());
  }
  CHECK(kostka(DominantWeight({2, 1, 0}), {1, 1, 1}) == 2);
  CHECK(kostka(DominantWeight({2, 1, 0}), {0, 1, 2}) == 1);
  CHECK(kostka(DominantWeight({2, 1, 0}), {3, 0, 0}) == 0);
}

TEST_CASE("non-module characters are rejected") {
  WeightCharacter lopsided(2);
  lopsided.add({1, 0}, 1);
  CHECK_THROWS_AS(schur_decompose(lopsided), ConsistencyError);

  WeightCharacter negative(2);  // symmetric but would need V(2,0) minus V(1,1)
  negative.add({2, 0}, 1);
  negative.add({0, 2}, 1);
  CHECK_THROWS_AS(schur_decompose(negative), ConsistencyError);
}

TEST_CASE("blocked rank") {
  const SparseVector v{{0, 1}, {2, 3}};
  CHECK(blocked_rank({v, v}, {0, 1, 0}) == 1);
  std::vector<SparseVector> basis;
  for (std::size_t i = 0; i < 10; ++i) basis.push_back({{i, 1}});
  std::vector<std::size_t> blocks(10);
  for (std::size_t i = 0; i < 10; ++i) blocks[i] = i % 3;
  CHECK(blocked_rank(basis, blocks) == 10);
  CHECK_THROWS(blocked_rank({SparseVector{{5, 1}}}, {0}));
}

TEST_CASE("orbit span of the permanent under GL(S1)") {
  GroupSampler sampler(VarSpace::full(3), Pattern::all(9), 7);
  OrbitSpanOptions o;
  o.upper_bound = 165;
  const OrbitSpan span = orbit_span(perm_poly(3), sampler, o);
  CHECK(span.span.dimension() == 165);
  CHECK(span.certified);
  const WeightCharacter chi = span.span.character();
  CHECK(chi.entries() == WeightCharacter::symmetric_power(3, 9).entries());
  const auto r = schur_decompose(chi);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries.begin()->first.key() == "3,0,0,0,0,0,0,0,0");
}

TEST_CASE("orbit span of a power under scalars is a line") {
  const VarSpace x = VarSpace::generic(1);
  GroupSampler sampler(x, Pattern::all(1), 3);
  const OrbitSpan span = orbit_span(Poly::variable(x, 0).pow(4), sampler);
  CHECK(span.span.dimension() == 1);
  CHECK_FALSE(span.certified);
  CHECK(span.samples == 3 * OrbitSpanOptions{}.round_size + OrbitSpanOptions{}.round_size);
}

TEST_CASE("orbit spans are monotone and stable under held-out samples") {
  // GL(S1)-orbit of a 2x2 permanent inside S^2: spans all quadrics.
  const VarSpace e = VarSpace::full(2);
  GroupSampler sampler(e, Pattern::all(4), 21);
  SpanBasis span(e, 2, Grading::exponents(4));
  std::size_t last = 0;
  for (int i = 0; i < 30; ++i) {
    span.add(act(sampler.next(), perm_poly(2)));
    CHECK(span.dimension() >= last);
    last = span.dimension();
  }
  CHECK(last == 10);
  Rng rng(77);
  for (const auto& b : span.basis())
    for (int t = 0; t < 10; ++t) CHECK(span.contains(act(GroupElement(e, random_invertible(4, rng)), b)));
}

TEST_CASE("span membership is exact") {
  const VarSpace e = VarSpace::full(2);
  SpanBasis span(e, 2, Grading::exponents(4));
  span.add(det_poly(2));
  // torus blocks: det splits into two monomial blocks
  CHECK(span.dimension() == 2);
  CHECK(span.contains(Poly::variable(e, 0) * Poly::variable(e, 3)));
  CHECK_FALSE(span.contains(Poly::variable(e, 0).pow(2)));
  CHECK_FALSE(span.contains(Poly::variable(e, 0)));
  CHECK_THROWS_AS(span.add(Poly::variable(e, 0)), PreconditionError);
}

TEST_CASE("modular blocks agree with exact blocks") {
  const VarSpace s = VarSpace::s_block(4, 3);
  const Grading x11 = Grading::columns([] {
    std::vector<Weight> w(10, Weight{0});
    w[0] = {1};
    return w;
  }());
  BlockPolicy mod;
  mod.force_modular = true;
  SpanBasis exact(s, 4, x11), modular(s, 4, x11, mod);
  GroupSampler sampler(s, Pattern::parabolic_r(s), 5);
  for (int i = 0; i < 60; ++i) {
    const Poly q = act(sampler.next(), padded_perm(4, 3));
    exact.add(q);
    modular.add(q);
  }
  CHECK(modular.uses_modular());
  CHECK_FALSE(exact.uses_modular());
  CHECK(modular.dimension() == exact.dimension());
  CHECK_FALSE(modular.primes_disagree());
  CHECK(exact.dimension() <= 165 + 495);  // x11 S^3(C^9) + S^4(C^9)
}

TEST_CASE("budget guard on weight blocks") {
  BlockPolicy tiny;
  tiny.size_budget = 100;
  const Grading coarse = Grading::columns(std::vector<Weight>(10, Weight{1}));
  CHECK_THROWS_AS(SpanBasis(VarSpace::s_block(6, 3), 6, coarse, tiny), BudgetExceeded);
}

TEST_CASE("linearize") {
  const auto mons = monomials_of_degree(4, 2);
  const Poly y = linearize(perm_poly(2), mons);
  CHECK(y.space().size() == 10);
  CHECK(y.term_count() == 2);
  CHECK(y.max_degree() == 1);
  CHECK_THROWS(linearize(det_poly(3), mons));
}
