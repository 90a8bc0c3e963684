#pragma once

#include "gct/poly.hpp"
#include "gct/sampling.hpp"

namespace gct::testing {

inline Poly random_poly(const VarSpace& s, int degree, int terms, Rng& rng) {
  Poly q(s);
  for (int t = 0; t < terms; ++t) {
    Exponent e(s.size(), 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(s.size()) - 1))];
    q.add_term(e, rng.uniform_int(-5, 5));
  }
  return q;
}

inline std::vector<Rational> point(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace gct::testing
