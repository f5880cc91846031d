#include <symprod/oracle.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace symprod {
namespace oracle {

BigradedSpace::BigradedSpace(std::map<std::pair<int, int>, int> dims) : dims_(std::move(dims)) {
  for (auto it = dims_.begin(); it != dims_.end();) {
    if (it->first.first < 0)
      throw std::invalid_argument("bigraded space: negative cohomological degree");
    if (it->second < 0) throw std::invalid_argument("bigraded space: negative dimension");
    it = (it->second == 0) ? dims_.erase(it) : std::next(it);
  }
}

int BigradedSpace::total_dim() const {
  int d = 0;
  for (const auto& [ip, dim] : dims_) d += dim;
  return d;
}

LaurentY BigradedSpace::chi_y() const {
  LaurentY chi;
  for (const auto& [ip, dim] : dims_) {
    auto [i, p] = ip;
    chi += LaurentY(Rational(i % 2 == 0 ? dim : -dim), p);
  }
  return chi;
}

BigradedSpace projective_line_model() {
  return BigradedSpace({{{0, 0}, 1}, {{2, 1}, 1}});
}

namespace {

constexpr long kDenseBound = 10000;
constexpr long kDenseAutoCutoff = 4096;

struct Basis {
  std::vector<int> deg_i, deg_p;
};

Basis expand_basis(const BigradedSpace& w) {
  Basis b;
  for (const auto& [ip, dim] : w.dims())
    for (int k = 0; k < dim; ++k) {
      b.deg_i.push_back(ip.first);
      b.deg_p.push_back(ip.second);
    }
  return b;
}

long pow_checked(long base, int e, long bound) {
  long v = 1;
  for (int k = 0; k < e; ++k) {
    if (base != 0 && v > bound / base + 1) return bound + 1;
    v *= base;
    if (v > bound) return bound + 1;
  }
  return v;
}

LaurentY dense_trace(const BigradedSpace& w, const Permutation& sigma) {
  Basis basis = expand_basis(w);
  int d = static_cast<int>(basis.deg_i.size());
  int n = sigma.degree();
  if (d == 0) return n == 0 ? LaurentY(Rational(1)) : LaurentY();
  std::map<std::pair<int, int>, long> buckets;
  std::vector<int> tuple(n, 0);
  while (true) {
    bool fixed = true;
    for (int j = 0; j < n && fixed; ++j) fixed = (tuple[sigma.apply(j)] == tuple[j]);
    if (fixed) {
      // Koszul sign: inversions of sigma restricted to odd-degree slots.
      int inversions = 0;
      for (int k = 0; k < n; ++k) {
        if (basis.deg_i[tuple[k]] % 2 == 0) continue;
        for (int l = k + 1; l < n; ++l) {
          if (basis.deg_i[tuple[l]] % 2 == 0) continue;
          if (sigma.apply(k) > sigma.apply(l)) ++inversions;
        }
      }
      int itot = 0, ptot = 0;
      for (int j = 0; j < n; ++j) {
        itot += basis.deg_i[tuple[j]];
        ptot += basis.deg_p[tuple[j]];
      }
      buckets[{itot, ptot}] += (inversions % 2 == 0) ? 1 : -1;
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] == d - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  LaurentY out;
  for (const auto& [ip, count] : buckets) {
    auto [itot, ptot] = ip;
    if (count != 0) out += LaurentY(Rational(itot % 2 == 0 ? count : -count), ptot);
  }
  return out;
}

LaurentY cyclewalk_trace(const BigradedSpace& w, const Permutation& sigma) {
  LaurentY out(Rational(1));
  Partition type = sigma.cycle_type();
  for (int r : type.parts()) {
    LaurentY factor;
    for (const auto& [ip, dim] : w.dims()) {
      auto [i, p] = ip;
      factor += LaurentY(Rational(i % 2 == 0 ? dim : -dim), static_cast<long>(p) * r);
    }
    out *= factor;
  }
  return out;
}

void check_trace_guard(const BigradedSpace& w, const Permutation& sigma) {
  int n = sigma.degree();
  if (n > 5)
    throw guard_error("kunneth_trace: n = " + std::to_string(n) + " exceeds guard 5");
  long size = pow_checked(w.total_dim(), n, kDenseBound);
  if (size > kDenseBound)
    throw guard_error("kunneth_trace: dim^n exceeds guard " + std::to_string(kDenseBound));
}

}  // namespace

LaurentY kunneth_trace(const BigradedSpace& w, const Permutation& sigma, TraceRoute route) {
  check_trace_guard(w, sigma);
  switch (route) {
    case TraceRoute::Dense:
      return dense_trace(w, sigma);
    case TraceRoute::CycleWalk:
      return cyclewalk_trace(w, sigma);
    case TraceRoute::Automatic: {
      long size = pow_checked(w.total_dim(), sigma.degree(), kDenseBound);
      return size <= kDenseAutoCutoff ? dense_trace(w, sigma) : cyclewalk_trace(w, sigma);
    }
  }
  throw std::logic_error("kunneth_trace: unknown route");
}

LaurentY kunneth_trace_twisted(const BigradedSpace& w, const Permutation& sigma,
                               const ClassFunction& v, TraceRoute route) {
  if (v.n() != sigma.degree())
    throw std::invalid_argument("kunneth_trace_twisted: degree mismatch");
  return kunneth_trace(w, sigma, route) * v.at(sigma);
}

LaurentY invariant_trace(const BigradedSpace& w, const std::vector<Permutation>& subgroup,
                         TraceRoute route) {
  if (subgroup.empty()) throw std::invalid_argument("invariant_trace: empty subgroup");
  int n = subgroup.front().degree();
  if (!is_subgroup(n, subgroup))
    throw std::invalid_argument("invariant_trace: input is not a subgroup");
  std::set<Permutation> members(subgroup.begin(), subgroup.end());
  LaurentY acc;
  for (const auto& g : members) acc += kunneth_trace(w, g, route);
  acc *= Rational(1) / Rational(static_cast<long>(members.size()));
  return acc;
}

LaurentY averaged_twisted_trace(const BigradedSpace& w, int n, const ClassFunction& v, int guard,
                                TraceRoute route) {
  if (v.n() != n) throw std::invalid_argument("averaged_twisted_trace: degree mismatch");
  LaurentY acc;
  for (const auto& g : enumerate_symmetric_group(n, guard))
    acc += kunneth_trace_twisted(w, g, v, route);
  acc *= Rational(1) / factorial(n);
  return acc;
}

FreeAlgElement direct_conjugacy_sum(const std::map<int, GradedClass>& b, int n) {
  if (n < 0) throw std::invalid_argument("direct_conjugacy_sum: negative n");
  FreeAlgElement acc;
  for (const auto& lambda : enumerate_partitions(n)) acc += class_for_sigma(b, lambda);
  return acc;
}

std::vector<Rational> euler_product_coefficients(int e, int N) {
  if (e < 0) throw std::invalid_argument("euler_product_coefficients: e must be >= 0");
  if (N < 0) throw std::invalid_argument("euler_product_coefficients: N must be >= 0");
  std::vector<Rational> acc(N + 1, Rational(0));
  acc[0] = 1;
  if (e == 0) return acc;
  for (int r = 1; r <= N; ++r) {
    // (1 - t^r)^{-e} = sum_k binom(k + e - 1, e - 1) t^{rk}
    std::vector<Rational> factor(N + 1, Rational(0));
    for (int k = 0; r * k <= N; ++k) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k + e - 1),
                   static_cast<unsigned long>(e - 1));
      factor[r * k] = Rational(c);
    }
    std::vector<Rational> next(N + 1, Rational(0));
    for (int i = 0; i <= N; ++i) {
      if (acc[i] == 0) continue;
      for (int j = 0; i + j <= N; ++j)
        if (factor[j] != 0) next[i + j] += acc[i] * factor[j];
    }
    acc = std::move(next);
  }
  return acc;
}

std::int64_t count_index_subgroups(int d, int r) {
  if (d < 1 || d > 3) throw std::invalid_argument("count_index_subgroups: d must be 1, 2 or 3");
  if (r < 1 || r > 200) throw std::invalid_argument("count_index_subgroups: r must be in [1,200]");
  // Enumerate diagonals (a_1..a_d) with product r, then walk every matrix
  // with 0 <= h_{ij} < a_j (i < j). Each HNF matrix is one subgroup.
  std::int64_t count = 0;
  std::vector<int> diag(d, 1);
  // Slot order for the off-diagonal entries h_{ij} (i < j): column by
  // column; the bound of every slot in column j is diag[j].
  std::vector<int> column_of_slot;
  for (int j = 1; j < d; ++j)
    for (int i = 0; i < j; ++i) column_of_slot.push_back(j);
  auto walk_offdiag = [&](auto&& self, std::size_t slot) -> void {
    if (slot == column_of_slot.size()) {
      ++count;
      return;
    }
    for (int v = 0; v < diag[column_of_slot[slot]]; ++v) self(self, slot + 1);
  };
  auto fill_diag = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d - 1) {
      diag[pos] = remaining;
      walk_offdiag(walk_offdiag, 0);
      return;
    }
    for (int a = 1; a <= remaining; ++a) {
      if (remaining % a != 0) continue;
      diag[pos] = a;
      self(self, pos + 1, remaining / a);
    }
  };
  fill_diag(fill_diag, 0, r);
  return count;
}

}  // namespace oracle
}  // namespace symprod
