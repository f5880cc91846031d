#pragma once

#include <symprod/partition.hpp>
#include <symprod/permutation.hpp>

#include <map>
#include <vector>

namespace symprod {

// Q-valued class function on S_n, stored by cycle type. The value map keys
// are exactly the partitions of n (n = 0: the empty partition only).
class ClassFunction {
 public:
  ClassFunction(int n, std::map<Partition, Rational> values);

  static ClassFunction trivial(int n);
  static ClassFunction sign(int n);
  static ClassFunction regular(int n);

  int n() const { return n_; }
  const std::map<Partition, Rational>& values() const { return values_; }

  const Rational& at(const Partition& lambda) const;
  const Rational& at(const Permutation& sigma) const { return at(sigma.cycle_type()); }

  ClassFunction& operator+=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  ClassFunction& scale(const Rational& c);

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::map<Partition, Rational> values_;
};

// <f, g> = (1/n!) sum_sigma f(sigma) g(sigma) = sum_lambda f(lambda) g(lambda) / z_lambda.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// Irreducible character chi_mu by the Murnaghan-Nakayama border-strip
// recursion, memoized on (remaining shape, position in the cycle list).
ClassFunction irreducible_character(const Partition& mu);

// All irreducibles of S_n in enumerate_partitions(n) order.
std::vector<ClassFunction> character_table(int n, int threads = 1);

// Character of Ind_K^{S_n}(triv): value at sigma is
// (1/|K|) #{ g in S_n : g sigma g^-1 in K }. K must be a subgroup.
ClassFunction induced_trivial_character(int n, const std::vector<Permutation>& subgroup,
                                        int guard = default_guard_n());

// Same value computed as the number of left cosets gK fixed by sigma;
// independent route kept for cross-checking.
Rational fixed_coset_count(int n, const std::vector<Permutation>& subgroup,
                           const Permutation& sigma, int guard = default_guard_n());

// Induction product: f on S_n, g on S_m to Ind_{S_n x S_m}^{S_{n+m}} (f x g),
// by explicit conjugation over S_{n+m}. Guarded on n + m.
ClassFunction induction_product(const ClassFunction& f, const ClassFunction& g,
                                int guard = default_guard_n());

// Canonical representative of cycle type lambda: consecutive cycles
// (1..l1)(l1+1..l1+l2)...
Permutation class_representative(const Partition& lambda, int n);

// True iff the set is a subgroup of S_n (closure of a greedily extracted
// generating set reproduces the set).
bool is_subgroup(int n, const std::vector<Permutation>& elements,
                 int guard = default_guard_n());

}  // namespace symprod
