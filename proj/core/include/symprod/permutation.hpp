#pragma once

#include <symprod/guards.hpp>
#include <symprod/partition.hpp>

#include <compare>
#include <string>
#include <vector>

namespace symprod {

// Permutation of {1..n}, stored as a 0-based image table. Composition is
// function composition: (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  explicit Permutation(std::vector<int> images);  // 0-based images, a bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i]; }  // 0-based
  const std::vector<int>& images() const { return images_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation& g) const;  // g * this * g^-1

  Partition cycle_type() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

  // Canonical cycle notation: cycles sorted by least element, each cycle
  // starting at its least element, fixed points omitted, identity -> "()".
  std::string cycle_string() const;

 private:
  std::vector<int> images_;
};

// Parses "(1 2)(3 4 5)" (1-based entries, disjoint cycles, commas or spaces
// inside a cycle, "()" for the identity) as a permutation of {1..n}.
Permutation permutation_from_cycles(const std::string& text, int n);

// All n! elements in lexicographic image order. Guarded.
std::vector<Permutation> enumerate_symmetric_group(int n, int guard = default_guard_n());

// Closure of the generators (plus identity) under products, by breadth-first
// search. All generators must share degree n.
std::vector<Permutation> subgroup_closure(int n, const std::vector<Permutation>& generators,
                                          int guard = default_guard_n());

// Alternating group as a closure fixture.
std::vector<Permutation> alternating_group(int n, int guard = default_guard_n());

}  // namespace symprod
