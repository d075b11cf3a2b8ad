#ifndef VOA_RATIONAL_HPP
#define VOA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace voa {

using Rational = mpq_class;
using Integer = mpz_class;

/* binomial with arbitrary integer upper argument and r >= 0;
   the product of r consecutive integers is divisible by r!, so the
   division is exact */
inline Integer binomial(long n, long r) {
  if (r < 0) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < r; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/* mpq_class(p, q) keeps the raw pair; always canonicalize ratios built
   from computed integers */
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace voa

#endif
