#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "gct/poly.hpp"

/// Arithmetic modulo word-size primes p < 2^62, used as the fast rank route.
namespace gct::modp {

bool is_prime(std::uint64_t n);

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t power(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

/// Image of a rational in Z/p; throws if p divides the denominator.
std::uint64_t reduce(const Rational& q, std::uint64_t p);

/// Multiplication by a fixed w using Shoup's precomputed quotient.
class ShoupMultiplier {
 public:
  ShoupMultiplier(std::uint64_t w, std::uint64_t p)
      : w_(w), p_(p), wpre_(static_cast<std::uint64_t>((static_cast<unsigned __int128>(w) << 64) / p)) {}
  std::uint64_t operator()(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * wpre_) >> 64);
    std::uint64_t r = x * w_ - q * p_;
    return r >= p_ ? r - p_ : r;
  }

 private:
  std::uint64_t w_, p_, wpre_;
};

/// Incrementally built row echelon form over Z/p with dense rows.
/// Every stored row is zero left of its pivot and has 1 at the pivot.
class Echelon {
 public:
  Echelon(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::uint64_t prime() const { return p_; }
  bool full() const { return rows_.size() == cols_; }

  /// Reduces v against the stored rows; returns true if it raised the rank.
  bool add(std::vector<std::uint64_t> v);
  bool contains(std::vector<std::uint64_t> v) const;

 private:
  void reduce(std::vector<std::uint64_t>& v) const;

  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Sparse polynomial over Z/p with exponents packed into one 64-bit key.
/// Only usable when every variable fits in 64 / nvars bits for the degrees involved.
class ModPoly {
 public:
  ModPoly(std::size_t nvars, std::uint64_t p);
  static ModPoly from(const Poly& q, std::uint64_t p);
  static ModPoly constant(std::size_t nvars, std::uint64_t c, std::uint64_t p);

  std::size_t nvars() const { return nvars_; }
  std::uint64_t prime() const { return p_; }
  const std::unordered_map<std::uint64_t, std::uint64_t>& terms() const { return terms_; }

  void add_term(std::uint64_t key, std::uint64_t c);
  std::uint64_t pack(const Exponent& e) const;
  Exponent unpack(std::uint64_t key) const;
  int degree_of(std::uint64_t key, std::size_t v) const {
    return static_cast<int>((key >> (v * bits_)) & ((std::uint64_t{1} << bits_) - 1));
  }

  ModPoly operator*(const ModPoly& rhs) const;
  ModPoly& operator+=(const ModPoly& rhs);
  int max_degree() const;

 private:
  std::size_t nvars_;
  std::uint64_t p_;
  unsigned bits_;
  std::unordered_map<std::uint64_t, std::uint64_t> terms_;
};

/// act(g, q) reduced mod p, computed without rational arithmetic.
ModPoly act_mod(const GroupElement& g, const Poly& q, std::uint64_t p);

}  // namespace gct::modp
