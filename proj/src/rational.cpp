#include "gct/rational.hpp"

#include "gct/errors.hpp"

namespace gct {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw PreconditionError("not a rational number: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw PreconditionError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace gct
