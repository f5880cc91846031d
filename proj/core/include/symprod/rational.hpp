#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symprod {

// Exact scalar of the whole engine. mpq_class keeps fractions in lowest
// terms with positive denominator, which is exactly the canonical form the
// serialization contract expects ("num/den", denominator omitted when 1).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "n" or "n/d" with optional sign, exact, no whitespace.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty literal");
  std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("rational: bad literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading '+'
  mpz_class zn(num), zd(den);
  if (zd == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

inline Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (q == 0) throw std::invalid_argument("rational: 0 to a negative power");
    return 1 / rational_pow(q, -e);
  }
  Rational base = q, acc(1);
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace symprod
