#include "galmod/rational.hpp"

#include "galmod/error.hpp"

namespace galmod {

Rational parse_fraction(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::Parse, "bad fraction '" + text + "'");
  }
  r.canonicalize();
  return r;
}

long inverse_mod(long a, long m) {
  long old_r = mod(a, m), r = m;
  long old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorCode::Domain, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return mod(old_s, m);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace galmod
