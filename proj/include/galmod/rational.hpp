#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

namespace galmod {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic order of a nonzero integer.
inline long ord_p(const Integer& n, long p) {
  if (n == 0) return std::numeric_limits<long>::max();
  Integer m = abs(n);
  long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

inline long ord_p(const Rational& r, long p) {
  if (r == 0) return std::numeric_limits<long>::max();
  return ord_p(Integer(r.get_num()), p) - ord_p(Integer(r.get_den()), p);
}

/// "num/den" form used by the JSON formats; integers print without a slash.
inline std::string to_fraction_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(const std::string& text);

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long lcm(long a, long b) { return a / gcd(a, b) * b; }

/// Inverse of a modulo m; requires gcd(a, m) = 1.
long inverse_mod(long a, long m);

/// Centered representative of a mod n in [(1-n)/2, (n-1)/2]; n odd.
inline long centered(long a, long n) {
  long r = mod(a, n);
  return r > (n - 1) / 2 ? r - n : r;
}

bool is_prime(long n);

}  // namespace galmod
