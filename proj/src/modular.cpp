#include "gct/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace gct::modp {

std::uint64_t power(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
  return power(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = power(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t reduce(const Rational& q, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8, "needs 64-bit unsigned long");
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw std::domain_error("prime divides a denominator");
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mul(num, inverse(den, p), p);
}

void Echelon::reduce(std::vector<std::uint64_t>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t piv = pivots_[i];
    const std::uint64_t c = v[piv];
    if (c == 0) continue;
    const ShoupMultiplier times_c(c, p_);
    const std::uint64_t* row = rows_[i].data();
    std::uint64_t* out = v.data();
    for (std::size_t k = piv; k < cols_; ++k) {
      const std::uint64_t t = times_c(row[k]);
      out[k] = out[k] >= t ? out[k] - t : out[k] + p_ - t;
    }
  }
}

bool Echelon::add(std::vector<std::uint64_t> v) {
  if (v.size() != cols_) throw std::invalid_argument("echelon vector length mismatch");
  if (full()) return false;
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
  if (it == v.end()) return false;
  const auto piv = static_cast<std::size_t>(it - v.begin());
  const ShoupMultiplier normalize(inverse(v[piv], p_), p_);
  for (std::size_t k = piv; k < cols_; ++k) v[k] = normalize(v[k]);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool Echelon::contains(std::vector<std::uint64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("echelon vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

ModPoly::ModPoly(std::size_t nvars, std::uint64_t p) : nvars_(nvars), p_(p) {
  if (nvars == 0 || nvars > 64) throw std::invalid_argument("ModPoly supports 1..64 variables");
  bits_ = static_cast<unsigned>(std::min<std::size_t>(8, 64 / nvars));
}

ModPoly ModPoly::constant(std::size_t nvars, std::uint64_t c, std::uint64_t p) {
  ModPoly r(nvars, p);
  r.add_term(0, c % p);
  return r;
}

std::uint64_t ModPoly::pack(const Exponent& e) const {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  std::uint64_t key = 0;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (e[v] >> bits_) throw std::overflow_error("exponent does not fit the packed key");
    key |= std::uint64_t{e[v]} << (v * bits_);
  }
  return key;
}

Exponent ModPoly::unpack(std::uint64_t key) const {
  Exponent e(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) e[v] = static_cast<std::uint8_t>(degree_of(key, v));
  return e;
}

ModPoly ModPoly::from(const Poly& q, std::uint64_t p) {
  ModPoly r(q.space().size(), p);
  for (const auto& [e, c] : q.terms()) r.add_term(r.pack(e), reduce(c, p));
  return r;
}

void ModPoly::add_term(std::uint64_t key, std::uint64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second = modp::add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

int ModPoly::max_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) {
    int t = 0;
    for (std::size_t v = 0; v < nvars_; ++v) t += degree_of(key, v);
    d = std::max(d, t);
  }
  return d;
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
  if (rhs.nvars_ != nvars_ || rhs.p_ != p_) throw std::invalid_argument("ModPoly operands differ");
  if (max_degree() + rhs.max_degree() >= (1 << bits_)) throw std::overflow_error("product degree exceeds packing");
  ModPoly r(nvars_, p_);
  r.terms_.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& [ka, ca] : terms_) {
    const ShoupMultiplier times(ca, p_);
    for (const auto& [kb, cb] : rhs.terms_) r.add_term(ka + kb, times(cb));
  }
  return r;
}

ModPoly& ModPoly::operator+=(const ModPoly& rhs) {
  if (rhs.nvars_ != nvars_ || rhs.p_ != p_) throw std::invalid_argument("ModPoly operands differ");
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

ModPoly act_mod(const GroupElement& g, const Poly& q, std::uint64_t p) {
  if (!(g.space == q.space())) throw std::invalid_argument("act_mod: spaces differ");
  const std::size_t k = q.space().size();
  std::vector<ModPoly> images;
  images.reserve(k);
  for (std::size_t v = 0; v < k; ++v) {
    ModPoly form(k, p);
    for (std::size_t u = 0; u < k; ++u) {
      if (sgn(g.matrix(u, v)) == 0) continue;
      Exponent e(k, 0);
      e[u] = 1;
      form.add_term(form.pack(e), reduce(g.matrix(u, v), p));
    }
    images.push_back(std::move(form));
  }
  std::vector<std::vector<ModPoly>> powers(k);
  auto power_of = [&](std::size_t v, int d) -> const ModPoly& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(ModPoly::constant(k, 1, p));
    while (static_cast<int>(pw.size()) <= d) pw.push_back(pw.back() * images[v]);
    return pw[d];
  };
  ModPoly result(k, p);
  for (const auto& [e, c] : q.terms()) {
    ModPoly t = ModPoly::constant(k, reduce(c, p), p);
    // Multiply the small factors first; the largest power goes last.
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < k; ++v)
      if (e[v] > 0) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    for (std::size_t v : order) t = t * power_of(v, e[v]);
    result += t;
  }
  return result;
}

}  // namespace gct::modp
