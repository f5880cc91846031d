#include <symprod/gen_series.hpp>

#include <numeric>
#include <stdexcept>

namespace symprod {

namespace {

void require_payloads(const std::map<int, GradedClass>& b, int N, const char* op) {
  for (int r = 1; r <= N; ++r)
    if (!b.count(r))
      throw std::invalid_argument(std::string(op) + ": payload missing for r = " +
                                  std::to_string(r));
}

FreeAlgElement d_monomial(const Partition& lambda, const GradedClass& cl,
                          const Rational& scalar) {
  Monomial mono;
  for (const auto& [r, k] : lambda.multiplicities()) {
    GradedClass payload = adams(r, cl);
    if (payload.is_zero()) return FreeAlgElement();
    for (int j = 0; j < k; ++j) mono.push_back(Generator{GenFamily::D, r, payload});
  }
  return FreeAlgElement(std::move(mono), YSymFunc(scalar));
}

}  // namespace

TruncSeries<FreeAlgElement> abstract_series(const std::map<int, GradedClass>& b, int N) {
  require_payloads(b, N, "abstract_series");
  TruncSeries<FreeAlgElement> f(N);
  for (int r = 1; r <= N; ++r)
    f.set_coeff(r, creation(r, b.at(r)) * (Rational(1) / Rational(r)));
  return series_exp(f);
}

TruncSeries<FreeAlgElement> equivariant_class_series(const GradedClass& cl, int N) {
  std::map<int, GradedClass> b;
  for (int r = 1; r <= N; ++r) b.emplace(r, adams(r, cl));
  return abstract_series(b, N);
}

TruncSeries<FreeAlgElement> identity_projection(const TruncSeries<FreeAlgElement>& s) {
  TruncSeries<FreeAlgElement> out(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    FreeAlgElement kept;
    for (const auto& [mono, c] : s.coeff(n).terms()) {
      bool all_weight_one = true;
      for (const auto& g : mono) all_weight_one = all_weight_one && (g.r == 1);
      if (all_weight_one) kept.add_term(mono, c);
    }
    out.set_coeff(n, std::move(kept));
  }
  return out;
}

TruncSeries<FreeAlgElement> symmetric_product_series(const GradedClass& cl, int N) {
  TruncSeries<FreeAlgElement> f(N);
  for (int r = 1; r <= N; ++r) {
    GradedClass payload = adams(r, cl);
    if (payload.is_zero()) continue;
    FreeAlgElement term(Monomial{Generator{GenFamily::D, r, payload}},
                        YSymFunc::power_sum(r) * (Rational(1) / Rational(r)));
    f.set_coeff(r, std::move(term));
  }
  return series_exp(f);
}

TruncSeries<FreeAlgElement> power_series_variant(const GradedClass& cl, int N, PowerVariant v) {
  TruncSeries<FreeAlgElement> base = symmetric_product_series(cl, N);
  PowerSumAssignment a = (v == PowerVariant::Symmetric)    ? assign_all_ones()
                         : (v == PowerVariant::Alternating) ? assign_signs()
                                                            : assign_forgetful();
  TruncSeries<FreeAlgElement> out(N);
  for (int n = 0; n <= N; ++n) {
    FreeAlgElement c = specialize_pont(base.coeff(n), a);
    if (v == PowerVariant::Forgetful) c = c * factorial(n);
    out.set_coeff(n, std::move(c));
  }
  return out;
}

FreeAlgElement twisted_class(int n, const ClassFunction& v, const GradedClass& cl) {
  if (v.n() != n) throw std::invalid_argument("twisted_class: class function degree mismatch");
  FreeAlgElement acc;
  for (const auto& lambda : enumerate_partitions(n)) {
    Rational weight = v.at(lambda) / z_of(lambda);
    if (weight == 0) continue;
    FreeAlgElement term = d_monomial(lambda, cl, weight);
    acc += term * YSymFunc::p_monomial(lambda);
  }
  return acc;
}

FreeAlgElement schur_class(int n, const Partition& mu, const GradedClass& cl) {
  if (mu.n() != n) throw std::invalid_argument("schur_class: mu must be a partition of n");
  return specialize_pont(twisted_class(n, irreducible_character(mu), cl), assign_all_ones());
}

bool schur_decomposition_check(int n, const GradedClass& cl) {
  FreeAlgElement lhs;
  for (const auto& mu : enumerate_partitions(n))
    lhs += schur_class(n, mu, cl) * embed_y(schur(mu));
  return lhs == symmetric_product_series(cl, n).coeff(n);
}

TruncSeries<LaurentY> degree_symmetric_series(const LaurentY& chi, int N, DegreeVariant variant) {
  TruncSeries<LaurentY> f(N);
  for (int r = 1; r <= N; ++r) {
    LaurentY term = laurent_substitute(chi, r) * (Rational(1) / Rational(r));
    if (variant == DegreeVariant::Alternating && r % 2 == 0) term *= Rational(-1);
    f.set_coeff(r, std::move(term));
  }
  return series_exp(f);
}

LaurentY quotient_genus(int n, const std::vector<Permutation>& subgroup, const LaurentY& chi,
                        int guard) {
  ClassFunction ind = induced_trivial_character(n, subgroup, guard);
  LaurentY acc;
  for (const auto& lambda : enumerate_partitions(n)) {
    Rational weight = ind.at(lambda) / z_of(lambda);
    if (weight == 0) continue;
    LaurentY prod(Rational(1));
    for (const auto& [r, k] : lambda.multiplicities())
      prod *= laurent_substitute(chi, r).pow(k);
    acc += prod * weight;
  }
  return acc;
}

YSymFunc twisted_genus(int n, const ClassFunction& v, const LaurentY& chi) {
  if (v.n() != n) throw std::invalid_argument("twisted_genus: class function degree mismatch");
  YSymFunc acc;
  for (const auto& lambda : enumerate_partitions(n)) {
    Rational weight = v.at(lambda) / z_of(lambda);
    if (weight == 0) continue;
    LaurentY prod(weight);
    for (const auto& [r, k] : lambda.multiplicities())
      prod *= laurent_substitute(chi, r).pow(k);
    acc.add_term(lambda, prod);
  }
  return acc;
}

LaurentY twisted_genus_scalar(int n, const ClassFunction& v, const LaurentY& chi) {
  return specialize_p(twisted_genus(n, v, chi), assign_all_ones());
}

TruncSeries<FreeAlgElement> ohmoto_series(const std::map<int, Rational>& j, const GradedClass& c,
                                          int N) {
  for (int r = 1; r <= N; ++r)
    if (!j.count(r))
      throw std::invalid_argument("ohmoto_series: j missing for r = " + std::to_string(r));
  TruncSeries<FreeAlgElement> f(N);
  for (int r = 1; r <= N; ++r)
    f.set_coeff(r, creation(r, c) * (j.at(r) / Rational(r)));
  return series_exp(f);
}

TruncSeries<Rational> ohmoto_scalar_series(const std::map<int, Rational>& j, const Rational& e,
                                           int N) {
  for (int r = 1; r <= N; ++r)
    if (!j.count(r))
      throw std::invalid_argument("ohmoto_scalar_series: j missing for r = " + std::to_string(r));
  TruncSeries<Rational> f(N);
  for (int r = 1; r <= N; ++r) f.set_coeff(r, j.at(r) * e / Rational(r));
  return series_exp(f);
}

std::map<int, Rational> j_constant_one(int N) {
  std::map<int, Rational> j;
  for (int r = 1; r <= N; ++r) j.emplace(r, 1);
  return j;
}

std::map<int, Rational> j_divisor_sum(int N) {
  std::map<int, Rational> j;
  for (int r = 1; r <= N; ++r) {
    long s = 0;
    for (long d = 1; d <= r; ++d)
      if (r % d == 0) s += d;
    j.emplace(r, s);
  }
  return j;
}

namespace {

int orbit_count(const Permutation& sigma, const Permutation& tau) {
  int n = sigma.degree();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  for (int i = 0; i < n; ++i) {
    unite(i, sigma.apply(i));
    unite(i, tau.apply(i));
  }
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++count;
  return count;
}

}  // namespace

Rational orbifold_euler(int n, const Rational& e, int guard) {
  if (n < 0) throw std::invalid_argument("orbifold_euler: negative n");
  check_guard(n, guard, "orbifold_euler");
  auto group = enumerate_symmetric_group(n, std::max(guard, n));
  Rational acc(0);
  for (const auto& sigma : group)
    for (const auto& tau : group) {
      if (!(sigma * tau == tau * sigma)) continue;
      acc += rational_pow(e, orbit_count(sigma, tau));
    }
  return acc / factorial(n);
}

}  // namespace symprod
