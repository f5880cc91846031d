#pragma once

#include <symprod/rational.hpp>

#include <stdexcept>
#include <vector>

namespace symprod {

// Truncated power series in t over a commutative Q-algebra R. The truncation
// order is an explicit argument of every constructor and stays fixed through
// arithmetic; it is never ambient state. R must be default-constructible to
// its zero, explicitly constructible from Rational, and provide +=, *, ==
// and multiplication by Rational.
template <class R>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(check_order(order) + 1) {}

  static TruncSeries zero(int order) { return TruncSeries(order); }
  static TruncSeries one(int order) {
    TruncSeries s(order);
    s.coeffs_[0] = R(Rational(1));
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const R& coeff(int k) const {
    range_check(k);
    return coeffs_[k];
  }
  void set_coeff(int k, R value) {
    range_check(k);
    coeffs_[k] = std::move(value);
  }

  const std::vector<R>& coeffs() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }

  TruncSeries& operator-=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] += o.coeffs_[k] * Rational(-1);
    return *this;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.same_order(b);
    TruncSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.coeffs_[i] == R()) continue;
      for (int j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries& scale(const Rational& c) {
    for (auto& x : coeffs_) x = x * c;
    return *this;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  TruncSeries truncated(int new_order) const {
    TruncSeries r(new_order);
    for (int k = 0; k <= new_order && k <= order(); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series: negative order");
    return order;
  }
  void range_check(int k) const {
    if (k < 0 || k > order()) throw std::invalid_argument("series: coefficient index out of range");
  }
  void same_order(const TruncSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series: order mismatch");
  }

  std::vector<R> coeffs_;
};

// exp(f) = sum f^k / k!; requires vanishing constant term so the sum is
// finite at every truncation order.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& f) {
  if (!(f.coeff(0) == R()))
    throw std::invalid_argument("series_exp: nonzero constant term");
  TruncSeries<R> acc = TruncSeries<R>::one(f.order());
  TruncSeries<R> term = TruncSeries<R>::one(f.order());
  for (int k = 1; k <= f.order(); ++k) {
    term = term * f;
    term.scale(Rational(1) / Rational(k));
    acc += term;
  }
  return acc;
}

// log(f) = sum (-1)^{k+1} (f-1)^k / k; requires constant term 1.
template <class R>
TruncSeries<R> series_log(const TruncSeries<R>& f) {
  if (!(f.coeff(0) == R(Rational(1))))
    throw std::invalid_argument("series_log: constant term must be 1");
  TruncSeries<R> g = f - TruncSeries<R>::one(f.order());
  TruncSeries<R> acc(f.order());
  TruncSeries<R> power = TruncSeries<R>::one(f.order());
  for (int k = 1; k <= f.order(); ++k) {
    power = power * g;
    TruncSeries<R> term = power;
    term.scale(Rational(k % 2 == 1 ? 1 : -1) / Rational(k));
    acc += term;
  }
  return acc;
}

}  // namespace symprod
