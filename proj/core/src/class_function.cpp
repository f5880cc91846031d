#include <symprod/class_function.hpp>
#include <symprod/parallel.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace symprod {

ClassFunction::ClassFunction(int n, std::map<Partition, Rational> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0) throw std::invalid_argument("class function: negative degree");
  auto classes = enumerate_partitions(n);
  if (values_.size() != classes.size())
    throw std::invalid_argument("class function: value map must cover every cycle type");
  for (const auto& lambda : classes)
    if (!values_.count(lambda))
      throw std::invalid_argument("class function: missing value at " + lambda.str());
}

ClassFunction ClassFunction::trivial(int n) {
  std::map<Partition, Rational> v;
  for (const auto& lambda : enumerate_partitions(n)) v.emplace(lambda, 1);
  return ClassFunction(n, std::move(v));
}

ClassFunction ClassFunction::sign(int n) {
  std::map<Partition, Rational> v;
  for (const auto& lambda : enumerate_partitions(n))
    v.emplace(lambda, (n - lambda.length()) % 2 == 0 ? 1 : -1);
  return ClassFunction(n, std::move(v));
}

ClassFunction ClassFunction::regular(int n) {
  std::map<Partition, Rational> v;
  for (const auto& lambda : enumerate_partitions(n))
    v.emplace(lambda, lambda.length() == n ? factorial(n) : Rational(0));
  return ClassFunction(n, std::move(v));
}

const Rational& ClassFunction::at(const Partition& lambda) const {
  auto it = values_.find(lambda);
  if (it == values_.end())
    throw std::invalid_argument("class function: no value at " + lambda.str());
  return it->second;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (n_ != o.n_) throw std::invalid_argument("class function: degree mismatch");
  for (auto& [lambda, v] : values_) v += o.values_.at(lambda);
  return *this;
}

ClassFunction& ClassFunction::scale(const Rational& c) {
  for (auto& [lambda, v] : values_) v *= c;
  return *this;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("inner_product: degree mismatch");
  Rational acc(0);
  for (const auto& [lambda, v] : f.values()) acc += v * g.at(lambda) / z_of(lambda);
  return acc;
}

namespace {

// Murnaghan-Nakayama on beta-sets. B holds the first-column hook lengths
// mu_j + (L - j); removing an r-strip replaces some b by b - r, with sign
// (-1)^{#elements strictly between}.
struct MNContext {
  std::vector<int> cycles;  // fixed processing order (descending parts)
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;

  long long value(const std::vector<int>& shape, std::size_t idx) {
    if (idx == cycles.size()) return 1;  // shape is empty iff sizes matched
    auto key = std::make_pair(shape, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = cycles[idx];
    int rows = static_cast<int>(shape.size());
    std::vector<int> beta(rows);
    for (int j = 0; j < rows; ++j) beta[j] = shape[j] + (rows - 1 - j);
    // beta is strictly decreasing.
    std::set<int> beta_set(beta.begin(), beta.end());

    long long total = 0;
    for (int b : beta) {
      if (b < r || beta_set.count(b - r)) continue;
      int height = 0;
      for (int c : beta)
        if (c > b - r && c < b) ++height;
      std::vector<int> nb;
      nb.reserve(rows);
      for (int c : beta)
        if (c != b) nb.push_back(c);
      nb.push_back(b - r);
      std::sort(nb.begin(), nb.end(), std::greater<int>());
      std::vector<int> nshape;
      int L = static_cast<int>(nb.size());
      for (int j = 0; j < L; ++j) {
        int part = nb[j] - (L - 1 - j);
        if (part > 0) nshape.push_back(part);
      }
      long long sub = value(nshape, idx + 1);
      total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

Partition restricted_cycle_type(const Permutation& tau, int from, int to) {
  std::vector<char> seen(tau.degree(), 0);
  std::vector<int> lengths;
  for (int i = from; i < to; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = tau.apply(j);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

bool preserves_block(const Permutation& tau, int n) {
  for (int i = 0; i < n; ++i)
    if (tau.apply(i) >= n) return false;
  return true;
}

}  // namespace

ClassFunction irreducible_character(const Partition& mu) {
  int n = mu.n();
  MNContext ctx;
  std::map<Partition, Rational> values;
  for (const auto& lambda : enumerate_partitions(n)) {
    ctx.cycles = lambda.parts();
    ctx.memo.clear();
    values.emplace(lambda, Rational(static_cast<long>(ctx.value(mu.parts(), 0))));
  }
  return ClassFunction(n, std::move(values));
}

std::vector<ClassFunction> character_table(int n, int threads) {
  auto mus = enumerate_partitions(n);
  return parallel_map(mus.size(), threads,
                      [&](std::size_t i) { return irreducible_character(mus[i]); });
}

Permutation class_representative(const Partition& lambda, int n) {
  if (lambda.n() > n) throw std::invalid_argument("class_representative: partition too large");
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  int base = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) im[base + i] = base + (i + 1) % part;
    base += part;
  }
  return Permutation(std::move(im));
}

bool is_subgroup(int n, const std::vector<Permutation>& elements, int guard) {
  check_guard(n, guard, "is_subgroup");
  if (elements.empty()) return false;
  std::set<Permutation> want;
  for (const auto& g : elements) {
    if (g.degree() != n) return false;
    want.insert(g);
  }
  if (!want.count(Permutation::identity(n))) return false;
  // Greedy generating set: closure stays cheap even when |K| = n!.
  std::vector<Permutation> gens;
  std::set<Permutation> have{Permutation::identity(n)};
  for (const auto& g : want) {
    if (have.count(g)) continue;
    gens.push_back(g);
    auto closure = subgroup_closure(n, gens, guard);
    have = std::set<Permutation>(closure.begin(), closure.end());
    if (have.size() > want.size()) return false;
  }
  return have == want;
}

ClassFunction induced_trivial_character(int n, const std::vector<Permutation>& subgroup,
                                        int guard) {
  check_guard(n, guard, "induced_trivial_character");
  if (!is_subgroup(n, subgroup, guard))
    throw std::invalid_argument("induced_trivial_character: input is not a subgroup");
  std::set<Permutation> members(subgroup.begin(), subgroup.end());
  auto group = enumerate_symmetric_group(n, guard);
  Rational order(static_cast<long>(members.size()));
  std::map<Partition, Rational> values;
  for (const auto& lambda : enumerate_partitions(n)) {
    Permutation rep = class_representative(lambda, n);
    long count = 0;
    for (const auto& g : group)
      if (members.count(rep.conjugated_by(g))) ++count;
    values.emplace(lambda, Rational(count) / order);
  }
  return ClassFunction(n, std::move(values));
}

Rational fixed_coset_count(int n, const std::vector<Permutation>& subgroup,
                           const Permutation& sigma, int guard) {
  check_guard(n, guard, "fixed_coset_count");
  std::set<Permutation> members(subgroup.begin(), subgroup.end());
  auto group = enumerate_symmetric_group(n, guard);
  std::set<Permutation> assigned;
  long fixed = 0;
  for (const auto& g : group) {
    if (assigned.count(g)) continue;
    for (const auto& k : members) assigned.insert(g * k);
    if (members.count((g.inverse() * sigma) * g)) ++fixed;
  }
  return Rational(fixed);
}

ClassFunction induction_product(const ClassFunction& f, const ClassFunction& g, int guard) {
  int n = f.n(), m = g.n(), total = n + m;
  check_guard(total, guard, "induction_product");
  auto big = enumerate_symmetric_group(total, guard);
  Rational denom = factorial(n) * factorial(m);
  std::map<Partition, Rational> values;
  for (const auto& lambda : enumerate_partitions(total)) {
    Permutation rep = class_representative(lambda, total);
    Rational acc(0);
    for (const auto& x : big) {
      Permutation tau = rep.conjugated_by(x.inverse());
      if (!preserves_block(tau, n)) continue;
      acc += f.at(restricted_cycle_type(tau, 0, n)) * g.at(restricted_cycle_type(tau, n, total));
    }
    values.emplace(lambda, acc / denom);
  }
  return ClassFunction(total, std::move(values));
}

}  // namespace symprod
