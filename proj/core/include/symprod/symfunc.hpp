#pragma once

#include <symprod/class_function.hpp>
#include <symprod/laurent.hpp>
#include <symprod/partition.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace symprod {

// Symmetric functions written in the power-sum basis: a sparse map
// p_lambda -> coefficient. The scalar S is Rational or LaurentY; the product
// is p_a * p_b = p_{a ++ b}. Canonical form stores no zero coefficients.
template <class S>
class SymFuncT {
 public:
  SymFuncT() = default;
  explicit SymFuncT(const Rational& c) {
    S v = S(c);
    if (!(v == S())) terms_.emplace(Partition(), std::move(v));
  }
  SymFuncT(const Partition& mono, S coeff) {
    if (!(coeff == S())) terms_.emplace(mono, std::move(coeff));
  }

  static SymFuncT power_sum(int r) {
    if (r < 1) throw std::invalid_argument("power_sum: r must be positive");
    return SymFuncT(Partition({r}), S(Rational(1)));
  }
  static SymFuncT p_monomial(const Partition& lambda) {
    return SymFuncT(lambda, S(Rational(1)));
  }

  const std::map<Partition, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? S() : it->second;
  }

  SymFuncT& operator+=(const SymFuncT& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  friend SymFuncT operator+(SymFuncT a, const SymFuncT& b) { return a += b; }
  SymFuncT operator-() const {
    SymFuncT r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c * Rational(-1));
    return r;
  }
  SymFuncT& operator-=(const SymFuncT& o) { return *this += -o; }
  friend SymFuncT operator-(SymFuncT a, const SymFuncT& b) { return a -= b; }

  friend SymFuncT operator*(const SymFuncT& a, const SymFuncT& b) {
    SymFuncT r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma.merged_with(mb), ca * cb);
    return r;
  }
  SymFuncT& operator*=(const SymFuncT& o) { return *this = *this * o; }

  friend SymFuncT operator*(SymFuncT a, const Rational& c) {
    if (c == 0) return SymFuncT();
    for (auto& [mono, v] : a.terms_) v = v * c;
    return a;
  }
  friend SymFuncT operator*(const Rational& c, SymFuncT a) { return std::move(a) * c; }

  friend bool operator==(const SymFuncT& a, const SymFuncT& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymFuncT& a, const SymFuncT& b) { return !(a == b); }

  bool is_homogeneous(int degree) const {
    for (const auto& [mono, c] : terms_)
      if (mono.n() != degree) return false;
    return true;
  }

  void add_term(const Partition& mono, const S& c) {
    if (c == S()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, c);
    } else {
      it->second += c;
      if (it->second == S()) terms_.erase(it);
    }
  }

 private:
  std::map<Partition, S> terms_;
};

using SymFunc = SymFuncT<Rational>;
// Power-sum polynomials with Laurent coefficients; this is the coefficient
// ring of the free delocalized algebra and the value ring of twisted genera.
using YSymFunc = SymFuncT<LaurentY>;

inline YSymFunc embed_y(const SymFunc& f) {
  YSymFunc r;
  for (const auto& [mono, c] : f.terms()) r.add_term(mono, LaurentY(c));
  return r;
}

// Power-sum substitution p_r -> a(r). A missing value (nullopt) is an error;
// named assignments below cover the standard specializations.
struct PowerSumAssignment {
  std::string name;
  std::function<std::optional<Rational>(int)> value;

  Rational at(int r) const {
    auto v = value(r);
    if (!v)
      throw std::invalid_argument("power-sum assignment '" + name + "' undefined at r = " +
                                  std::to_string(r));
    return *v;
  }
};

PowerSumAssignment assign_all_ones();          // p_r -> 1
PowerSumAssignment assign_signs();             // p_r -> (-1)^{r-1}
PowerSumAssignment assign_forgetful();         // p_1 -> 1, p_{r>=2} -> 0
PowerSumAssignment assign_explicit(std::map<int, Rational> values);

template <class S>
S specialize_p(const SymFuncT<S>& f, const PowerSumAssignment& a) {
  S out{};
  for (const auto& [mono, c] : f.terms()) {
    Rational factor(1);
    for (const auto& [r, k] : mono.multiplicities()) factor *= rational_pow(a.at(r), k);
    if (factor == 0) continue;
    S term = c * factor;
    if (!(term == S())) out += term;
  }
  return out;
}

// Frobenius characteristic: ch(f) = sum_lambda f(lambda) p_lambda / z_lambda.
// Ring isomorphism from (class functions, induction product) onto degree-n
// symmetric functions.
SymFunc frobenius_char(const ClassFunction& f);

// Inverse on homogeneous degree-n elements: f(lambda) = z_lambda * coeff.
ClassFunction frobenius_inverse(const SymFunc& s, int n);

// Schur function s_mu = ch(chi_mu).
SymFunc schur(const Partition& mu);

// h_n = ch(trivial character) = sum_lambda p_lambda / z_lambda.
SymFunc complete_homogeneous(int n);

// Hall pairing in the power basis: <p_a, p_b> = z_a [a == b].
Rational hall_inner(const SymFunc& a, const SymFunc& b);

}  // namespace symprod
