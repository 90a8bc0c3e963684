#include "gct/poly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "gct/errors.hpp"

namespace gct {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int s = int{a[i]} + int{b[i]};
    if (s > 255) throw std::overflow_error("exponent exceeds 255");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

void accumulate(Poly::Terms& terms, const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

}  // namespace

Poly Poly::constant(VarSpace space, const Rational& c) {
  Poly p(space);
  p.add_term(Exponent(space.size(), 0), c);
  return p;
}

Poly Poly::variable(VarSpace space, std::size_t v) {
  if (v >= space.size()) throw std::out_of_range("variable index out of range");
  Exponent e(space.size(), 0);
  e[v] = 1;
  return monomial(space, std::move(e));
}

Poly Poly::monomial(VarSpace space, Exponent e, const Rational& c) {
  if (e.size() != space.size()) throw std::invalid_argument("exponent length does not match space");
  Poly p(space);
  p.add_term(e, c);
  return p;
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != space_.size()) throw std::invalid_argument("exponent length does not match space");
  accumulate(terms_, e, c);
}

int Poly::max_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Poly::min_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
  return d;
}

bool Poly::is_homogeneous() const { return max_degree() == min_degree(); }

void Poly::check_space(const Poly& rhs) const {
  if (!(space_ == rhs.space_))
    throw std::invalid_argument("polynomials live in different spaces: " + space_.describe() + " vs " +
                                rhs.space_.describe());
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly r = *this;
  r += rhs;
  return r;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly r = *this;
  r -= rhs;
  return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly& Poly::operator+=(const Poly& rhs) {
  check_space(rhs);
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_space(rhs);
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, -c);
  return *this;
}

Poly Poly::operator*(const Poly& rhs) const {
  check_space(rhs);
  Poly r(space_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) accumulate(r.terms_, add_exponents(ea, eb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(space_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(space_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& rhs) const { return space_ == rhs.space_ && terms_ == rhs.terms_; }

Poly Poly::derivative(std::size_t v) const {
  if (v >= space_.size()) throw std::out_of_range("variable index out of range");
  Poly r(space_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    --d[v];
    accumulate(r.terms_, d, c * e[v]);
  }
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != space_.size())
    throw std::invalid_argument("evaluation point has length " + std::to_string(point.size()) + ", expected " +
                                std::to_string(space_.size()));
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != space_.size()) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) return *this;
  const VarSpace target = images.front().space();
  for (const auto& im : images)
    if (!(im.space() == target)) throw std::invalid_argument("substitution images live in different spaces");

  // powers[v][k] = images[v]^k, filled on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, int k) -> const Poly& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Poly::constant(target, 1));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[v]);
    return pw[k];
  };

  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) t = t * power(v, e[v]);
    r += t;
  }
  return r;
}

Poly Poly::embedded(const VarSpace& target) const {
  if (space_.kind() == VarSpace::Kind::generic || target.kind() == VarSpace::Kind::generic)
    throw std::invalid_argument("generic spaces cannot be embedded by matrix entry");
  if (target.m() != space_.m()) throw std::invalid_argument("embedding requires equal matrix size m");
  std::vector<std::size_t> where(space_.size());
  for (std::size_t v = 0; v < space_.size(); ++v) {
    auto [i, j] = space_.entry(v);
    where[v] = target.index_of(i, j);
  }
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Exponent t(target.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) t[where[v]] = e[v];
    r.terms_.emplace(std::move(t), c);
  }
  return r;
}

std::string Poly::to_text() const {
  std::ostringstream out;
  for (const auto& [e, c] : terms_) {
    out << to_fraction_string(c);
    for (auto x : e) out << ' ' << int{x};
    out << '\n';
  }
  return out.str();
}

Poly Poly::from_text(VarSpace space, const std::string& text) {
  Poly p(space);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string coeff;
    ls >> coeff;
    Exponent e;
    long x;
    while (ls >> x) {
      if (x < 0 || x > 255) throw PreconditionError("exponent out of range on line " + std::to_string(lineno));
      e.push_back(static_cast<std::uint8_t>(x));
    }
    if (!ls.eof()) throw PreconditionError("malformed term on line " + std::to_string(lineno));
    if (e.size() != space.size())
      throw PreconditionError("line " + std::to_string(lineno) + " has " + std::to_string(e.size()) +
                              " exponents, expected " + std::to_string(space.size()));
    p.add_term(e, parse_rational(coeff));
  }
  return p;
}

GroupElement::GroupElement(VarSpace s, RatMatrix mat) : space(s), matrix(std::move(mat)) {
  if (matrix.rows() != space.size() || matrix.cols() != space.size())
    throw std::invalid_argument("group element shape does not match " + space.describe());
}

GroupElement GroupElement::identity(VarSpace s) { return {s, RatMatrix::identity(s.size())}; }

LieElement::LieElement(VarSpace s, RatMatrix mat) : space(s), matrix(std::move(mat)) {
  if (matrix.rows() != space.size() || matrix.cols() != space.size())
    throw std::invalid_argument("Lie element shape does not match " + space.describe());
}

LieElement LieElement::elementary(VarSpace s, std::size_t a, std::size_t b) {
  RatMatrix e(s.size(), s.size());
  e(a, b) = 1;
  return {s, std::move(e)};
}

namespace {

// Sum over permutations of sign(sigma)^signed * prod x_{i,sigma(i)}, on `space`
// with rows/cols offset by `off`.
Poly permutation_sum(const VarSpace& space, int n, int off, bool with_sign) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Poly p(space);
  do {
    Exponent e(space.size(), 0);
    for (int i = 0; i < n; ++i) ++e[space.index_of(off + i + 1, off + sigma[i] + 1)];
    int inversions = 0;
    if (with_sign)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += sigma[i] > sigma[j];
    p.add_term(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return p;
}

}  // namespace

Poly det_poly(int m) {
  require(m >= 1, "det_poly requires m >= 1");
  return permutation_sum(VarSpace::full(m), m, 0, true);
}

Poly perm_poly(int n) {
  require(n >= 1, "perm_poly requires n >= 1");
  return permutation_sum(VarSpace::full(n), n, 0, false);
}

Poly padded_perm(int m, int n) {
  require(n >= 1 && n < m, "padded_perm requires 1 <= n < m");
  const VarSpace s = VarSpace::s_block(m, n);
  Poly block = permutation_sum(s, n, m - n, false);
  return Poly::variable(s, 0).pow(static_cast<unsigned>(m - n)) * block;
}

Poly act(const GroupElement& g, const Poly& q) {
  if (!(g.space == q.space())) throw std::invalid_argument("act: group element and polynomial spaces differ");
  if (!g.matrix.invertible()) throw std::invalid_argument("act: group element is singular");
  const std::size_t k = q.space().size();
  // x_v -> (g^t x)_v = sum_u g_{u,v} x_u
  std::vector<Poly> images;
  images.reserve(k);
  for (std::size_t v = 0; v < k; ++v) {
    Poly form(q.space());
    for (std::size_t u = 0; u < k; ++u) {
      if (sgn(g.matrix(u, v)) == 0) continue;
      Exponent e(k, 0);
      e[u] = 1;
      form.add_term(e, g.matrix(u, v));
    }
    images.push_back(std::move(form));
  }
  return q.substitute(images);
}

Poly lie_act(const LieElement& z, const Poly& q) {
  if (!(z.space == q.space())) throw std::invalid_argument("lie_act: Lie element and polynomial spaces differ");
  const std::size_t k = q.space().size();
  Poly r(q.space());
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      const Rational& zuv = z.matrix(u, v);
      if (sgn(zuv) == 0) continue;
      for (const auto& [e, c] : q.terms()) {
        if (e[v] == 0) continue;
        Exponent t = e;
        --t[v];
        ++t[u];
        r.add_term(t, c * zuv * e[v]);
      }
    }
  return r;
}

Rational evaluate(const Poly& q, std::span<const Rational> point) { return q.evaluate(point); }

Rational permanent_ryser(const RatMatrix& a) {
  if (!a.square()) throw std::invalid_argument("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n > 30) throw std::invalid_argument("Ryser permanent limited to n <= 30");
  std::vector<Rational> row_sums(n, 0);
  Rational total = 0;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t flipped = next ^ gray;
    const auto col = static_cast<std::size_t>(__builtin_ctzll(flipped));
    const bool added = (next & flipped) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sums[i] += a(i, col);
      else
        row_sums[i] -= a(i, col);
    }
    gray = next;
    Rational prod = 1;
    for (std::size_t i = 0; i < n && sgn(prod) != 0; ++i) prod *= row_sums[i];
    const int size = __builtin_popcountll(gray);
    if ((n - size) % 2)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

Rational permanent_naive(const RatMatrix& a) {
  if (!a.square()) throw std::invalid_argument("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational total = 0;
  do {
    Rational t = 1;
    for (std::size_t i = 0; i < n; ++i) t *= a(i, sigma[i]);
    total += t;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::vector<Rational> flatten(const RatMatrix& a) {
  std::vector<Rational> v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

}  // namespace gct
