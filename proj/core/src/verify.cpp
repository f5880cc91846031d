#include <symprod/verify.hpp>

#include <symprod/gen_series.hpp>
#include <symprod/parallel.hpp>
#include <symprod/symfunc.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symprod {

namespace testgen {

Rational random_rational(Rng& rng) {
  long num = draw(rng, -9, 9);
  long den = draw(rng, 1, 9);
  return make_rational(num, den);
}

LaurentY random_laurent(Rng& rng, bool allow_negative_exponents) {
  LaurentY f;
  long terms = draw(rng, 1, 3);
  for (long t = 0; t < terms; ++t)
    f.set(draw(rng, allow_negative_exponents ? -2 : 0, 2), random_rational(rng));
  return f;
}

ClassKind random_kind(Rng& rng) {
  switch (draw(rng, 0, 2)) {
    case 0: return ClassKind::Chern;
    case 1: return ClassKind::Todd;
    default: return ClassKind::HirzebruchMinusY;
  }
}

GradedClass random_graded_class(Rng& rng, ClassKind kind, const std::string& label) {
  std::map<int, LaurentY> comps;
  long pieces = draw(rng, 1, 2);
  for (long k = 0; k < pieces; ++k) {
    int degree = static_cast<int>(draw(rng, 0, 3));
    LaurentY value = (kind == ClassKind::HirzebruchMinusY)
                         ? random_laurent(rng)
                         : LaurentY(random_rational(rng));
    comps[degree] += value;
  }
  // Keep the class nonzero so creation payloads stay meaningful.
  if (GradedClass(kind, comps, label).is_zero()) comps[0] += LaurentY(Rational(1));
  return GradedClass(kind, std::move(comps), label);
}

std::map<int, GradedClass> random_payloads(Rng& rng, int N, ClassKind kind) {
  std::map<int, GradedClass> b;
  for (int r = 1; r <= N; ++r)
    b.emplace(r, random_graded_class(rng, kind, "b" + std::to_string(r)));
  return b;
}

oracle::BigradedSpace random_bigraded(Rng& rng, int max_total_dim) {
  long total = draw(rng, 1, max_total_dim);
  std::map<std::pair<int, int>, int> dims;
  for (long v = 0; v < total; ++v) {
    int i = static_cast<int>(draw(rng, 0, 3));
    int p = static_cast<int>(draw(rng, -1, 2));
    ++dims[{i, p}];
  }
  return oracle::BigradedSpace(std::move(dims));
}

ClassFunction random_class_function(Rng& rng, int n) {
  std::map<Partition, Rational> values;
  for (const auto& lambda : enumerate_partitions(n)) values.emplace(lambda, random_rational(rng));
  return ClassFunction(n, std::move(values));
}

FreeAlgElement random_a_monomial(Rng& rng, int max_factors) {
  Monomial mono;
  long factors = draw(rng, 1, max_factors);
  for (long f = 0; f < factors; ++f) {
    int r = static_cast<int>(draw(rng, 1, 3));
    mono.push_back(Generator{GenFamily::A, r,
                             random_graded_class(rng, random_kind(rng),
                                                 "v" + std::to_string(draw(rng, 0, 2)))});
  }
  YSymFunc coeff(Partition(), random_laurent(rng));
  if (draw(rng, 0, 1) == 1)
    coeff = YSymFunc(Partition(std::vector<int>{static_cast<int>(draw(rng, 1, 3))}),
                     random_laurent(rng));
  if (coeff.is_zero()) coeff = YSymFunc(Rational(1));
  return FreeAlgElement(std::move(mono), std::move(coeff));
}

}  // namespace testgen

namespace verify {

namespace {

using testgen::Rng;

struct Recorder {
  SuiteResult result;

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) result.failures.push_back(what);
  }
};

LaurentY substituted_product(const LaurentY& chi, const Partition& lambda) {
  LaurentY prod(Rational(1));
  for (const auto& [r, k] : lambda.multiplicities())
    prod *= laurent_substitute(chi, r).pow(k);
  return prod;
}

SuiteResult suite_conjsum(const Options& o) {
  Recorder rec;
  rec.result.name = "conjsum";
  int N = std::min(o.max_n, 8);
  Rng rng(o.seed);
  for (int trial = 0; trial < o.trials; ++trial) {
    auto b = testgen::random_payloads(rng, N, testgen::random_kind(rng));
    auto series = abstract_series(b, N);
    for (int n = 0; n <= N; ++n)
      rec.check(series.coeff(n) == oracle::direct_conjugacy_sum(b, n),
                "abstract_series t^" + std::to_string(n) + " != direct conjugacy sum (trial " +
                    std::to_string(trial) + ")");
  }
  for (ClassKind kind : {ClassKind::Chern, ClassKind::Todd, ClassKind::HirzebruchMinusY}) {
    GradedClass cl = testgen::random_graded_class(rng, kind, "c");
    auto series = equivariant_class_series(cl, N);
    std::map<int, GradedClass> b;
    for (int r = 1; r <= N; ++r) b.emplace(r, adams(r, cl));
    for (int n = 0; n <= N; ++n)
      rec.check(series.coeff(n) == oracle::direct_conjugacy_sum(b, n),
                "equivariant series t^" + std::to_string(n) + " mismatch, kind " +
                    kind_name(kind));
    TruncSeries<FreeAlgElement> plain(N);
    plain.set_coeff(1, creation(1, cl));
    rec.check(identity_projection(series) == series_exp(plain),
              "identity projection != exp(t A_1(cl)), kind " + kind_name(kind));
  }
  return rec.result;
}

SuiteResult suite_kunneth(const Options& o) {
  Recorder rec;
  rec.result.name = "kunneth";
  Rng rng(o.seed + 1);
  int max_n = std::min(o.max_n, 4);
  for (int trial = 0; trial < o.trials; ++trial) {
    auto w = testgen::random_bigraded(rng, 3);
    LaurentY chi = w.chi_y();
    for (int n = 1; n <= max_n; ++n)
      for (const auto& sigma : enumerate_symmetric_group(n)) {
        LaurentY dense = oracle::kunneth_trace(w, sigma, oracle::TraceRoute::Dense);
        rec.check(dense == substituted_product(chi, sigma.cycle_type()),
                  "dense trace != product formula at n=" + std::to_string(n) + " sigma=" +
                      sigma.cycle_string());
        rec.check(dense == oracle::kunneth_trace(w, sigma, oracle::TraceRoute::CycleWalk),
                  "dense trace != cycle-walk trace at sigma=" + sigma.cycle_string());
      }
  }
  return rec.result;
}

SuiteResult suite_macdonald(const Options& o) {
  Recorder rec;
  rec.result.name = "macdonald";
  LaurentY chi = LaurentY(Rational(1)) + LaurentY::y();
  int N = std::max(o.max_n, 12);
  auto series = degree_symmetric_series(chi, N);
  for (int n = 0; n <= N; ++n) {
    LaurentY expect;
    for (long i = 0; i <= n; ++i) expect += LaurentY(Rational(1), i);
    rec.check(series.coeff(n) == expect, "Macdonald coefficient mismatch at n=" + std::to_string(n));
  }
  auto alt = degree_symmetric_series(chi, 6, DegreeVariant::Alternating);
  LaurentY one(Rational(1));
  rec.check(alt.coeff(0) == one, "alternating t^0");
  rec.check(alt.coeff(1) == chi, "alternating t^1");
  rec.check(alt.coeff(2) == LaurentY::y(), "alternating t^2");
  for (int n = 3; n <= 6; ++n)
    rec.check(alt.coeff(n) == LaurentY(), "alternating t^" + std::to_string(n) + " should vanish");
  return rec.result;
}

SuiteResult suite_quotient(const Options& o) {
  Recorder rec;
  rec.result.name = "quotient";
  auto w = oracle::projective_line_model();
  LaurentY chi = w.chi_y();
  int max_n = std::min(o.max_n, 4);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<Permutation>> subgroups;
    subgroups.push_back({Permutation::identity(n)});
    subgroups.push_back(enumerate_symmetric_group(n));
    for (const auto& sigma : enumerate_symmetric_group(n))
      subgroups.push_back(subgroup_closure(n, {sigma}));
    if (n == 3) subgroups.push_back(alternating_group(3));
    for (const auto& k : subgroups)
      rec.check(quotient_genus(n, k, chi) == oracle::invariant_trace(w, k),
                "quotient genus != invariant trace at n=" + std::to_string(n) +
                    " |K|=" + std::to_string(k.size()));
  }
  LaurentY fixture = quotient_genus(3, alternating_group(3), chi);
  LaurentY expect;
  for (long i = 0; i <= 3; ++i) expect += LaurentY(Rational(1), i);
  rec.check(fixture == expect, "A_3 quotient fixture != 1+y+y^2+y^3");
  return rec.result;
}

SuiteResult suite_frobenius(const Options& o) {
  Recorder rec;
  rec.result.name = "frobenius";
  int bound = std::min(o.max_n, 6);
  for (int n = 1; n < bound; ++n)
    for (int m = 1; n + m <= bound; ++m)
      for (const auto& mu : enumerate_partitions(n))
        for (const auto& nu : enumerate_partitions(m)) {
          ClassFunction f = irreducible_character(mu);
          ClassFunction g = irreducible_character(nu);
          rec.check(frobenius_char(induction_product(f, g)) ==
                        frobenius_char(f) * frobenius_char(g),
                    "Frobenius multiplicativity fails at " + mu.str() + " x " + nu.str());
        }
  int ortho_n = std::min(o.max_n, 7);
  for (int n = 1; n <= ortho_n; ++n) {
    auto table = character_table(n, o.threads);
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = a; b < table.size(); ++b)
        rec.check(inner_product(table[a], table[b]) == Rational(a == b ? 1 : 0),
                  "orthogonality fails at n=" + std::to_string(n));
  }
  return rec.result;
}

SuiteResult suite_twist(const Options& o) {
  Recorder rec;
  rec.result.name = "twist";
  Rng rng(o.seed + 2);
  int max_n = std::min(o.max_n, 4);
  for (int trial = 0; trial < std::max(1, o.trials / 2); ++trial) {
    GradedClass cl = testgen::random_graded_class(rng, testgen::random_kind(rng), "c");
    for (int n = 0; n <= max_n; ++n) {
      auto sym = symmetric_product_series(cl, n);
      rec.check(twisted_class(n, ClassFunction::trivial(n), cl) == sym.coeff(n),
                "trivial twist != symmetric coefficient at n=" + std::to_string(n));
      auto alt = power_series_variant(cl, n, PowerVariant::Alternating);
      rec.check(specialize_pont(twisted_class(n, ClassFunction::sign(n), cl), assign_all_ones()) ==
                    alt.coeff(n),
                "sign twist != alternating coefficient at n=" + std::to_string(n));
      rec.check(schur_decomposition_check(n, cl),
                "Schur decomposition fails at n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    auto w = testgen::random_bigraded(rng, 2);
    ClassFunction v = testgen::random_class_function(rng, n);
    rec.check(twisted_genus_scalar(n, v, w.chi_y()) == oracle::averaged_twisted_trace(w, n, v),
              "twisted genus != averaged twisted trace at n=" + std::to_string(n));
  }
  return rec.result;
}

SuiteResult suite_orbifold(const Options& o) {
  Recorder rec;
  rec.result.name = "orbifold";
  int max_n = std::min(o.max_n, 5);
  for (int e = 0; e <= 3; ++e) {
    auto expected = oracle::euler_product_coefficients(e, max_n);
    for (int n = 0; n <= max_n; ++n)
      rec.check(orbifold_euler(n, Rational(e)) == expected[n],
                "orbifold euler mismatch at n=" + std::to_string(n) + " e=" + std::to_string(e));
  }
  auto j2 = j_divisor_sum(60);
  for (int r = 1; r <= 60; ++r) {
    rec.check(Rational(oracle::count_index_subgroups(2, r)) == j2.at(r),
              "sublattice count != sigma_1 at r=" + std::to_string(r));
    rec.check(oracle::count_index_subgroups(1, r) == 1,
              "Z has more than one index-r subgroup at r=" + std::to_string(r));
  }
  auto shadow = ohmoto_scalar_series(j_divisor_sum(5), Rational(2), 5);
  auto ladder = oracle::euler_product_coefficients(2, 5);
  for (int n = 0; n <= 5; ++n)
    rec.check(shadow.coeff(n) == ladder[n],
              "Ohmoto scalar shadow != Euler product at n=" + std::to_string(n));
  return rec.result;
}

SuiteResult suite_diagram(const Options& o) {
  Recorder rec;
  rec.result.name = "diagram";
  Rng rng(o.seed + 3);
  for (int trial = 0; trial < std::max(10, o.trials); ++trial) {
    FreeAlgElement x = testgen::random_a_monomial(rng, 3);
    FreeAlgElement y = testgen::random_a_monomial(rng, 2);
    rec.check(pushforward_pi(x * y) == pushforward_pi(x) * pushforward_pi(y),
              "pushforward not multiplicative (trial " + std::to_string(trial) + ")");
    rec.check(average_F(x * y) == average_F(x) * average_F(y),
              "average_F not multiplicative (trial " + std::to_string(trial) + ")");
    auto signs = assign_signs();
    rec.check(specialize_pont(pushforward_pi(x * y), signs) ==
                  specialize_pont(pushforward_pi(x), signs) *
                      specialize_pont(pushforward_pi(y), signs),
              "specialize_pont not multiplicative (trial " + std::to_string(trial) + ")");
    rec.check(specialize_pont(pushforward_pi(x), assign_all_ones()) ==
                  relabel_family(average(x), GenFamily::Delta, GenFamily::D),
              "diagram routes disagree (trial " + std::to_string(trial) + ")");
    auto parts_x = x.weight_parts();
    auto parts_y = y.weight_parts();
    if (parts_x.size() == 1 && parts_y.size() == 1) {
      int n = parts_x.begin()->first, m = parts_y.begin()->first;
      rec.check(twisted_multiply(x, y) ==
                    (x * y) * (factorial(n) * factorial(m) / factorial(n + m)),
                "twisted product scaling (trial " + std::to_string(trial) + ")");
    }
  }
  Rng rng2(o.seed + 4);
  for (int r = 1; r <= 4; ++r) {
    GradedClass v = testgen::random_graded_class(rng2, testgen::random_kind(rng2), "v");
    FreeAlgElement a = creation(r, v);
    rec.check(pushforward_pi(a) ==
                  FreeAlgElement(Monomial{Generator{GenFamily::D, r, v}},
                                 YSymFunc::power_sum(r)),
              "pushforward of creation != p_r D_r at r=" + std::to_string(r));
    rec.check(average_F(a) == FreeAlgElement(Monomial{Generator{GenFamily::Delta, r, v}},
                                             YSymFunc::power_sum(r)),
              "average_F of creation != p_r Delta_r at r=" + std::to_string(r));
    rec.check(average(a) == FreeAlgElement(Monomial{Generator{GenFamily::Delta, r, v}},
                                           YSymFunc(Rational(1))),
              "average of creation != Delta_r at r=" + std::to_string(r));
  }
  return rec.result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"conjsum",     "kunneth",  "macdonald",
                                                 "quotient",  "frobenius", "twist",
                                                 "orbifold",  "diagram"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Options& options) {
  if (name == "conjsum") return suite_conjsum(options);
  if (name == "kunneth") return suite_kunneth(options);
  if (name == "macdonald") return suite_macdonald(options);
  if (name == "quotient") return suite_quotient(options);
  if (name == "frobenius") return suite_frobenius(options);
  if (name == "twist") return suite_twist(options);
  if (name == "orbifold") return suite_orbifold(options);
  if (name == "diagram") return suite_diagram(options);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const Options& options) {
  return parallel_map(names.size(), options.threads,
                      [&](std::size_t i) { return run_suite(names[i], options); });
}

}  // namespace verify
}  // namespace symprod
