#pragma once

#include <symprod/rational.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace symprod {

// Integer partition with parts sorted descending; the empty partition is the
// unique partition of 0. Also used as a cycle type and as a power-sum
// monomial index p_lambda.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Multiplicity map r -> k_r (cycle-type view).
  std::map<int, int> multiplicities() const;
  static Partition from_multiplicities(const std::map<int, int>& mult);

  // Concatenate-and-resort; as power-sum monomials this is p_a * p_b.
  Partition merged_with(const Partition& o) const;

  auto operator<=>(const Partition&) const = default;

  std::string str() const;  // "[3,2,1]", "[]"

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

using CycleType = std::map<int, int>;

// All partitions of n in reverse-lexicographic order: [n] first, [1,...,1]
// last; n = 0 yields exactly the empty partition.
std::vector<Partition> enumerate_partitions(int n);

// Centralizer order z_lambda = prod_r r^{k_r} k_r!. The conjugacy class of
// cycle type lambda in S_n has n!/z_lambda elements.
Rational z_of(const Partition& lambda);

int length_of(const Partition& lambda);

// "[3,2,1]" or "3,2,1"; must be sorted descending, positive parts.
Partition partition_from_string(const std::string& text);

}  // namespace symprod
