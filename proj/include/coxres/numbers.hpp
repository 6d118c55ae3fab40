#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace coxres {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (reduced, positive denominator), which the whole library relies
// on for syntactic equality.
using Int = mpz_class;
using Rational = mpq_class;

inline Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long> divisors_of(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline long gcd_long(long a, long b) {
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

inline std::string int_to_string(const Int& v) { return v.get_str(); }

inline std::string rational_to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace coxres
