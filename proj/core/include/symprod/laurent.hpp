#pragma once

#include <symprod/rational.hpp>

#include <map>
#include <string>

namespace symprod {

// Laurent polynomial in one variable y over Q. Sparse, canonical: the term
// map never stores a zero coefficient, so operator== is structural equality.
class LaurentY {
 public:
  LaurentY() = default;
  explicit LaurentY(const Rational& c) {
    if (c != 0) terms_[0] = c;
  }
  LaurentY(const Rational& c, long exponent) {
    if (c != 0) terms_[exponent] = c;
  }

  static LaurentY y(long exponent = 1) { return LaurentY(Rational(1), exponent); }

  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  Rational coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LaurentY& operator+=(const LaurentY& o);
  LaurentY& operator-=(const LaurentY& o);
  LaurentY operator-() const;
  friend LaurentY operator+(LaurentY a, const LaurentY& b) { return a += b; }
  friend LaurentY operator-(LaurentY a, const LaurentY& b) { return a -= b; }
  friend LaurentY operator*(const LaurentY& a, const LaurentY& b);
  LaurentY& operator*=(const LaurentY& o) { return *this = *this * o; }
  LaurentY& operator*=(const Rational& c);
  friend LaurentY operator*(LaurentY a, const Rational& c) { return a *= c; }
  friend LaurentY operator*(const Rational& c, LaurentY a) { return a *= c; }

  friend bool operator==(const LaurentY& a, const LaurentY& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentY& a, const LaurentY& b) { return !(a == b); }

  // Deterministic total order (lexicographic on the sparse term list);
  // used wherever LaurentY participates in a map key or canonical sort.
  static int compare(const LaurentY& a, const LaurentY& b);
  friend bool operator<(const LaurentY& a, const LaurentY& b) {
    return compare(a, b) < 0;
  }

  LaurentY pow(long e) const;

  // Evaluation at a rational point (used by the Euler specialization y -> 1).
  Rational evaluate(const Rational& value) const;

  // "1+y", "y^-1+2y^3" style rendering; matches the parser grammar.
  std::string str() const;

  void set(long exponent, const Rational& c) {
    if (c == 0)
      terms_.erase(exponent);
    else
      terms_[exponent] = c;
  }

 private:
  std::map<long, Rational> terms_;
};

// y -> y^r on a Laurent polynomial; r may be any nonzero integer.
LaurentY laurent_substitute(const LaurentY& f, long r);

// Recursive-descent parser for the CLI grammar: sums of terms
// 'coeff', 'y', 'coeff y', 'y^e', 'coeff y^e' with rational coeff ("3", "3/2")
// and integer exponent (possibly negative). Whitespace is ignored; an
// optional '*' may separate coefficient and variable.
LaurentY laurent_from_string(const std::string& text);

}  // namespace symprod
