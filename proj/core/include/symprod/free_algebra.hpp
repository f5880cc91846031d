#pragma once

#include <symprod/graded_class.hpp>
#include <symprod/partition.hpp>
#include <symprod/symfunc.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symprod {

// Families of formal generators of the free model:
//   A_r(v)     delocalized equivariant classes supported on r-cycles
//   D_r(v)     their pushforwards to the symmetric product
//   Delta_r(v) diagonally supported classes on the base
enum class GenFamily { A, D, Delta };

std::string family_name(GenFamily f);
GenFamily family_from_name(const std::string& name);

// One formal generator. Identity includes the full payload, not just the
// label: a weight-r generator on an Adams-twisted payload (same label,
// scaled components) must stay distinct from the untwisted one.
struct Generator {
  GenFamily family;
  int r;  // weight, >= 1
  GradedClass payload;

  static int compare(const Generator& a, const Generator& b);
  friend bool operator==(const Generator& a, const Generator& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Generator& a, const Generator& b) {
    return compare(a, b) < 0;
  }

  std::string display() const;  // "A2(c)" style
};

// Commutative monomial: sorted multiset of generators. Empty = unit.
using Monomial = std::vector<Generator>;

int monomial_weight(const Monomial& m);
std::string monomial_key(const Monomial& m);  // "1" or "A1(c)*A2(c)"

// Element of the free commutative algebra on the generators, with
// coefficients in Q[y^{+-1}][p_1, p_2, ...] (LaurentY-valued power-sum
// polynomials). Weight grading: weight(A_r(v)) = r.
class FreeAlgElement {
 public:
  FreeAlgElement() = default;
  explicit FreeAlgElement(const Rational& c);
  explicit FreeAlgElement(const YSymFunc& scalar);
  FreeAlgElement(Monomial mono, YSymFunc coeff);

  static FreeAlgElement one() { return FreeAlgElement(Rational(1)); }

  const std::map<Monomial, YSymFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  YSymFunc coeff(const Monomial& m) const;

  FreeAlgElement& operator+=(const FreeAlgElement& o);
  friend FreeAlgElement operator+(FreeAlgElement a, const FreeAlgElement& b) { return a += b; }
  FreeAlgElement operator-() const;
  FreeAlgElement& operator-=(const FreeAlgElement& o) { return *this += -o; }
  friend FreeAlgElement operator-(FreeAlgElement a, const FreeAlgElement& b) { return a -= b; }
  friend FreeAlgElement operator*(const FreeAlgElement& a, const FreeAlgElement& b);
  FreeAlgElement& operator*=(const FreeAlgElement& o) { return *this = *this * o; }
  friend FreeAlgElement operator*(FreeAlgElement a, const Rational& c);
  friend FreeAlgElement operator*(const Rational& c, FreeAlgElement a) {
    return std::move(a) * c;
  }
  friend FreeAlgElement operator*(const FreeAlgElement& a, const YSymFunc& s);

  friend bool operator==(const FreeAlgElement& a, const FreeAlgElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreeAlgElement& a, const FreeAlgElement& b) { return !(a == b); }

  // Weight of a homogeneous element; nullopt when mixed (zero: weight 0).
  std::optional<int> homogeneous_weight() const;
  std::map<int, FreeAlgElement> weight_parts() const;

  void add_term(Monomial mono, const YSymFunc& c);

 private:
  std::map<Monomial, YSymFunc> terms_;
};

// The creation operator applied to a class: the weight-r monomial A_r(c).
// Linear in the payload; a zero class gives the zero element.
FreeAlgElement creation(int r, const GradedClass& c);

// Summand attached to the conjugacy class of cycle type lambda when every
// weight-r slot carries the class b_r:
//   prod_r A_r(b_r)^{k_r} / (k_r! r^{k_r}).
// b must provide b_r for every part r of lambda.
FreeAlgElement class_for_sigma(const std::map<int, GradedClass>& b, const Partition& lambda);

// Pushforward to the symmetric product: multiplicative extension of
// A_r(v) -> p_r * D_r(v). Input must lie in the A-family algebra.
FreeAlgElement pushforward_pi(const FreeAlgElement& x);

// Frobenius-type averaging: multiplicative extension of
// A_r(v) -> p_r * Delta_r(v). Input must lie in the A-family algebra.
FreeAlgElement average_F(const FreeAlgElement& x);

// average_F followed by p_i -> 1 (the plain averaging map).
FreeAlgElement average(const FreeAlgElement& x);

// Substitutes the power sums in every coefficient; the result has p-free
// coefficients. Intended for D-family elements (Pontrjagin-ring picture).
FreeAlgElement specialize_pont(const FreeAlgElement& x, const PowerSumAssignment& a);

// Twisted product on the weight grading: on homogeneous pieces of weights
// n and m it is (n! m! / (n+m)!) times the plain product, extended
// bilinearly. The scaling is the normalization that relates averages taken
// over different symmetric groups.
FreeAlgElement twisted_multiply(const FreeAlgElement& x, const FreeAlgElement& y);

// Formal identification of families (e.g. read Delta_r as D_r when comparing
// the averaging route with the pushforward route).
FreeAlgElement relabel_family(const FreeAlgElement& x, GenFamily from, GenFamily to);

}  // namespace symprod
