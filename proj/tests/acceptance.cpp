// Acceptance gate: ten independent end-to-end checks of the engine, each
// printed as one PASS/FAIL line with its runtime and budget. Every comparison
// is exact (rational / Laurent equality, tolerance zero); a check also fails
// when it exceeds its time budget. The exit code is the number of failures.
//
// Check 10 exercises the installed CLI and needs SYMPROD_BIN / SYMPROD_GOLDEN
// in the environment (ctest sets them); the other checks link the core
// library directly.

#include <symprod/class_function.hpp>
#include <symprod/free_algebra.hpp>
#include <symprod/gen_series.hpp>
#include <symprod/graded_class.hpp>
#include <symprod/laurent.hpp>
#include <symprod/oracle.hpp>
#include <symprod/partition.hpp>
#include <symprod/permutation.hpp>
#include <symprod/rational.hpp>
#include <symprod/series.hpp>
#include <symprod/symfunc.hpp>

#include "cli_util.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace symprod;

// --------------------------------------------------------------------------
// Deterministic random inputs (mt19937 has a fully specified output sequence).
// --------------------------------------------------------------------------

int pick(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

Rational random_rational(std::mt19937& rng) {
  return Rational(pick(rng, -9, 9)) / Rational(pick(rng, 1, 9));
}

LaurentY random_laurent(std::mt19937& rng) {
  LaurentY f;
  int terms = pick(rng, 1, 3);
  for (int i = 0; i < terms; ++i) f += LaurentY(random_rational(rng), pick(rng, -2, 2));
  return f;
}

ClassKind random_kind(std::mt19937& rng) {
  switch (pick(rng, 0, 2)) {
    case 0: return ClassKind::Chern;
    case 1: return ClassKind::Todd;
    default: return ClassKind::HirzebruchMinusY;
  }
}

// A nonzero graded class with small components; only the Hirzebruch kind may
// carry y-dependent coefficients.
GradedClass random_class(std::mt19937& rng, const std::string& label) {
  ClassKind kind = random_kind(rng);
  std::map<int, LaurentY> comps;
  int count = pick(rng, 1, 2);
  for (int i = 0; i < count; ++i) {
    int degree = pick(rng, 0, 3);
    LaurentY c = kind == ClassKind::HirzebruchMinusY ? random_laurent(rng)
                                                     : LaurentY(random_rational(rng));
    comps[degree] += c;
  }
  comps[0] += LaurentY(Rational(1));  // keep the class nonzero
  return GradedClass(kind, comps, label);
}

// Payloads b_1..b_N with roughly half of the ranks carrying the zero class
// (the sparse shape: dropped ranks contribute nothing to the series).
std::map<int, GradedClass> random_sparse_payloads(std::mt19937& rng, int N) {
  std::map<int, GradedClass> b;
  ClassKind kind = random_kind(rng);
  bool any_nonzero = false;
  for (int r = 1; r <= N; ++r) {
    std::string label = "b" + std::to_string(r);
    if (pick(rng, 0, 1) == 0) {
      b.emplace(r, GradedClass(kind, {}, label));
    } else {
      b.emplace(r, random_class(rng, label));
      any_nonzero = true;
    }
  }
  if (!any_nonzero) b.insert_or_assign(1, random_class(rng, "b1"));
  return b;
}

oracle::BigradedSpace random_space(std::mt19937& rng, bool force_odd_degree) {
  std::map<std::pair<int, int>, int> dims;
  int total = pick(rng, 1, 3);
  for (int v = 0; v < total; ++v) {
    int i = (force_odd_degree && v == 0) ? 2 * pick(rng, 0, 1) + 1 : pick(rng, 0, 3);
    int p = pick(rng, -1, 2);
    ++dims[{i, p}];
  }
  return oracle::BigradedSpace(dims);
}

// A random monomial element of the A-family algebra: 1..3 generator factors
// and a coefficient that is either a Laurent constant or a single p_r term.
FreeAlgElement random_a_monomial(std::mt19937& rng) {
  Monomial mono;
  int factors = pick(rng, 1, 3);
  for (int i = 0; i < factors; ++i) {
    int r = pick(rng, 1, 3);
    std::string label = "v" + std::to_string(pick(rng, 0, 2));
    mono.push_back(Generator{GenFamily::A, r, random_class(rng, label)});
  }
  std::sort(mono.begin(), mono.end());
  LaurentY scalar = random_laurent(rng) + LaurentY(Rational(1));
  YSymFunc coeff = pick(rng, 0, 1) == 0
                       ? YSymFunc(Partition(), scalar)
                       : YSymFunc(Partition({pick(rng, 1, 3)}), scalar);
  return FreeAlgElement(std::move(mono), std::move(coeff));
}

LaurentY cycle_product(const LaurentY& chi, const Permutation& sigma) {
  LaurentY acc(Rational(1));
  Partition type = sigma.cycle_type();
  for (int r : type.parts()) acc = acc * laurent_substitute(chi, r);
  return acc;
}

// --------------------------------------------------------------------------
// Check runner.
// --------------------------------------------------------------------------

struct Gate {
  int failures = 0;

  void run(int index, const std::string& what, double budget_seconds,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = elapsed < budget_seconds;
    if (ok && !in_budget) detail = "over time budget";
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  [%2d] %s  (%.2fs / %.0fs budget)%s%s\n", pass ? "PASS" : "FAIL", index,
                what.c_str(), elapsed, budget_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
  }
};

std::string show(const LaurentY& f) { return f.str(); }

}  // namespace

int main() {
  Gate gate;

  // 1. The exponential-form series equals the direct sum over conjugacy
  //    classes, coefficient by coefficient, for sparse payload assignments.
  gate.run(1, "series engine equals conjugacy-sum oracle (n <= 8, 50 sparse payload sets)", 10.0,
           [](std::string& detail) {
             std::mt19937 rng(20260825u);
             const int N = 8;
             for (int trial = 0; trial < 50; ++trial) {
               auto b = random_sparse_payloads(rng, N);
               auto series = abstract_series(b, N);
               for (int n = 0; n <= N; ++n) {
                 if (!(series.coeff(n) == oracle::direct_conjugacy_sum(b, n))) {
                   detail = "mismatch at trial " + std::to_string(trial) + ", n = " +
                            std::to_string(n);
                   return false;
                 }
               }
             }
             return true;
           });

  // 2. Dense graded trace on tensor powers (Koszul signs included) equals the
  //    per-cycle substitution product for every permutation.
  gate.run(2, "tensor-power trace equals per-cycle substitution product (n <= 4, 20 spaces)",
           30.0, [](std::string& detail) {
             std::mt19937 rng(7u);
             for (int trial = 0; trial < 20; ++trial) {
               auto w = random_space(rng, trial % 2 == 1);
               LaurentY chi = w.chi_y();
               for (int n = 1; n <= 4; ++n) {
                 for (const auto& sigma : enumerate_symmetric_group(n)) {
                   LaurentY dense = oracle::kunneth_trace(w, sigma, oracle::TraceRoute::Dense);
                   LaurentY expected = cycle_product(chi, sigma);
                   if (!(dense == expected)) {
                     detail = "trial " + std::to_string(trial) + ", n = " + std::to_string(n) +
                              ", sigma = " + sigma.cycle_string() + ": " + show(dense) +
                              " != " + show(expected);
                     return false;
                   }
                 }
               }
             }
             return true;
           });

  // 3. Symmetric-power genus series of chi = 1 + y: the t^n coefficient is
  //    the geometric sum 1 + y + ... + y^n (closed form 1/((1-t)(1-yt))).
  gate.run(3, "symmetric-power genus of 1+y gives 1 + y + ... + y^n up to order 12", 1.0,
           [](std::string& detail) {
             LaurentY chi = LaurentY(Rational(1)) + LaurentY::y();
             auto series = degree_symmetric_series(chi, 12);
             for (int n = 0; n <= 12; ++n) {
               LaurentY expected;
               for (int i = 0; i <= n; ++i) expected += LaurentY(Rational(1), i);
               if (!(series.coeff(n) == expected)) {
                 detail = "n = " + std::to_string(n) + ": " + show(series.coeff(n));
                 return false;
               }
             }
             return true;
           });

  // 4. Alternating-power genus series of 1 + y terminates as (1+t)(1+yt):
  //    coefficients 1, 1+y, y, then zero.
  gate.run(4, "alternating-power genus of 1+y equals (1+t)(1+yt) to order 6", 1.0,
           [](std::string& detail) {
             LaurentY chi = LaurentY(Rational(1)) + LaurentY::y();
             auto series = degree_symmetric_series(chi, 6, DegreeVariant::Alternating);
             std::vector<LaurentY> expected(7);
             expected[0] = LaurentY(Rational(1));
             expected[1] = LaurentY(Rational(1)) + LaurentY::y();
             expected[2] = LaurentY::y();
             for (int n = 0; n <= 6; ++n) {
               if (!(series.coeff(n) == expected[n])) {
                 detail = "n = " + std::to_string(n) + ": " + show(series.coeff(n));
                 return false;
               }
             }
             return true;
           });

  // 5. Quotient genus equals the invariant part of the dense trace for the
  //    projective-line model, over a family of subgroups of each symmetric
  //    group, including the cyclic-of-order-3 fixture 1 + y + y^2 + y^3.
  gate.run(5, "quotient genus equals subgroup-invariant trace (projective line, n <= 4)", 30.0,
           [](std::string& detail) {
             auto w = oracle::projective_line_model();
             LaurentY chi = w.chi_y();
             for (int n = 1; n <= 4; ++n) {
               std::vector<std::vector<Permutation>> subgroups;
               subgroups.push_back(subgroup_closure(n, {}));
               for (const auto& sigma : enumerate_symmetric_group(n))
                 subgroups.push_back(subgroup_closure(n, {sigma}));
               subgroups.push_back(enumerate_symmetric_group(n));
               if (n == 3) subgroups.push_back(alternating_group(3));
               for (const auto& k : subgroups) {
                 LaurentY genus = quotient_genus(n, k, chi);
                 LaurentY invariants = oracle::invariant_trace(w, k);
                 if (!(genus == invariants)) {
                   detail = "n = " + std::to_string(n) + ", |K| = " + std::to_string(k.size()) +
                            ": " + show(genus) + " != " + show(invariants);
                   return false;
                 }
               }
             }
             LaurentY fixture = quotient_genus(3, alternating_group(3), chi);
             if (!(fixture == laurent_from_string("1+y+y^2+y^3"))) {
               detail = "cyclic-of-order-3 fixture gave " + show(fixture);
               return false;
             }
             return true;
           });

  // 6. Representation twists: the Schur-piece decomposition recombines to the
  //    symmetric-product coefficient, and the trivial / sign twists reproduce
  //    the symmetric and alternating specializations.
  gate.run(6, "Schur decomposition and trivial/sign twist coherence (n <= 5, random classes)",
           20.0, [](std::string& detail) {
             std::mt19937 rng(11u);
             for (int n = 1; n <= 5; ++n) {
               for (int trial = 0; trial < 5; ++trial) {
                 GradedClass cl = random_class(rng, "c");
                 if (!schur_decomposition_check(n, cl)) {
                   detail = "decomposition failed at n = " + std::to_string(n) + ", trial " +
                            std::to_string(trial);
                   return false;
                 }
               }
               GradedClass cl = random_class(rng, "c");
               FreeAlgElement trivial_twist = twisted_class(n, ClassFunction::trivial(n), cl);
               if (!(trivial_twist == symmetric_product_series(cl, n).coeff(n))) {
                 detail = "trivial twist != symmetric coefficient at n = " + std::to_string(n);
                 return false;
               }
               FreeAlgElement sign_at_one =
                   specialize_pont(twisted_class(n, ClassFunction::sign(n), cl),
                                   assign_all_ones());
               if (!(sign_at_one ==
                     power_series_variant(cl, n, PowerVariant::Alternating).coeff(n))) {
                 detail = "sign twist at p=1 != alternating coefficient at n = " +
                          std::to_string(n);
                 return false;
               }
             }
             return true;
           });

  // 7. The Frobenius characteristic turns induction products into products of
  //    symmetric functions, and the irreducible characters are orthonormal.
  gate.run(7, "Frobenius map is a ring isomorphism (products n+m <= 6, orthogonality n <= 7)",
           60.0, [](std::string& detail) {
             for (int n = 1; n <= 5; ++n) {
               for (int m = 1; n + m <= 6; ++m) {
                 for (const auto& mu : enumerate_partitions(n)) {
                   for (const auto& nu : enumerate_partitions(m)) {
                     ClassFunction f = irreducible_character(mu);
                     ClassFunction g = irreducible_character(nu);
                     SymFunc lhs = frobenius_char(induction_product(f, g));
                     SymFunc rhs = frobenius_char(f) * frobenius_char(g);
                     if (!(lhs == rhs)) {
                       detail = "product failed for " + mu.str() + " x " + nu.str();
                       return false;
                     }
                   }
                 }
               }
             }
             for (int n = 1; n <= 7; ++n) {
               auto table = character_table(n);
               for (std::size_t i = 0; i < table.size(); ++i) {
                 for (std::size_t j = 0; j < table.size(); ++j) {
                   Rational want(i == j ? 1 : 0);
                   if (!(inner_product(table[i], table[j]) == want)) {
                     detail = "orthogonality failed at n = " + std::to_string(n);
                     return false;
                   }
                 }
               }
             }
             return true;
           });

  // 8. Orbifold ladder: recompute the product expansion prod_r (1-t^r)^{-2}
  //    with the independent oracle, check the frozen values 1 2 5 10 20 36,
  //    and match the engine; index-r sublattice counts of Z^2 equal sigma_1.
  gate.run(8, "orbifold Euler ladder matches product expansion; Z^2 subgroup counts = sigma_1",
           20.0, [](std::string& detail) {
             auto expansion = oracle::euler_product_coefficients(2, 5);
             const long frozen[] = {1, 2, 5, 10, 20, 36};
             for (int n = 0; n <= 5; ++n) {
               if (!(expansion[static_cast<std::size_t>(n)] == Rational(frozen[n]))) {
                 detail = "product expansion disagrees with frozen value at n = " +
                          std::to_string(n);
                 return false;
               }
               if (!(orbifold_euler(n, Rational(2)) == expansion[static_cast<std::size_t>(n)])) {
                 detail = "engine disagrees with product expansion at n = " + std::to_string(n);
                 return false;
               }
             }
             for (int r = 1; r <= 200; ++r) {
               long sigma1 = 0;
               for (int d = 1; d <= r; ++d)
                 if (r % d == 0) sigma1 += d;
               if (oracle::count_index_subgroups(2, r) != sigma1) {
                 detail = "sublattice count at r = " + std::to_string(r);
                 return false;
               }
             }
             return true;
           });

  // 9. Structure maps are ring homomorphisms on the free model, and the
  //    creation-operator images are the pinned generator identities
  //    (pushforward A_r -> p_r D_r, averaging A_r -> p_r Delta_r).
  gate.run(9, "pushforward/averaging/specialization homomorphisms on 100 random monomials", 5.0,
           [](std::string& detail) {
             std::mt19937 rng(3u);
             const PowerSumAssignment assignments[] = {assign_all_ones(), assign_signs(),
                                                       assign_forgetful()};
             for (int trial = 0; trial < 100; ++trial) {
               FreeAlgElement x = random_a_monomial(rng);
               FreeAlgElement y = random_a_monomial(rng);
               if (!(pushforward_pi(x * y) == pushforward_pi(x) * pushforward_pi(y))) {
                 detail = "pushforward not multiplicative at trial " + std::to_string(trial);
                 return false;
               }
               if (!(average_F(x * y) == average_F(x) * average_F(y))) {
                 detail = "averaging not multiplicative at trial " + std::to_string(trial);
                 return false;
               }
               FreeAlgElement u = pushforward_pi(x);
               FreeAlgElement v = pushforward_pi(y);
               for (const auto& a : assignments) {
                 if (!(specialize_pont(u * v, a) ==
                       specialize_pont(u, a) * specialize_pont(v, a))) {
                   detail = "specialization not multiplicative at trial " +
                            std::to_string(trial);
                   return false;
                 }
               }
             }
             for (int r = 1; r <= 4; ++r) {
               GradedClass cl = random_class(rng, "c");
               FreeAlgElement a_r = creation(r, cl);
               FreeAlgElement p_r_d_r(Monomial{Generator{GenFamily::D, r, cl}},
                                      YSymFunc::power_sum(r));
               FreeAlgElement p_r_delta_r(Monomial{Generator{GenFamily::Delta, r, cl}},
                                          YSymFunc::power_sum(r));
               FreeAlgElement delta_r(Monomial{Generator{GenFamily::Delta, r, cl}},
                                      YSymFunc(Rational(1)));
               if (!(pushforward_pi(a_r) == p_r_d_r) || !(average_F(a_r) == p_r_delta_r) ||
                   !(average(a_r) == delta_r)) {
                 detail = "creation identity failed at r = " + std::to_string(r);
                 return false;
               }
             }
             return true;
           });

  // 10. CLI determinism: every golden file is reproduced byte-identically by
  //     fresh runs with two different worker counts.
  gate.run(10, "CLI golden outputs reproduced byte-identically with 1 and 4 worker threads",
           120.0, [](std::string& detail) {
             std::string bin = cli_util::require_env("SYMPROD_BIN");
             std::string golden_dir = cli_util::require_env("SYMPROD_GOLDEN");
             for (const auto& c : cli_util::cases()) {
               std::string expected = cli_util::read_file(golden_dir + "/" + c.golden);
               for (int threads : {1, 4}) {
                 auto result =
                     cli_util::run_command(bin, cli_util::expand_args(c, golden_dir, threads),
                                           threads);
                 if (result.exit_code != c.expected_exit) {
                   detail = std::string(c.golden) + ": exit " +
                            std::to_string(result.exit_code) + " (want " +
                            std::to_string(c.expected_exit) + ") with " +
                            std::to_string(threads) + " threads";
                   return false;
                 }
                 if (result.output != expected) {
                   detail = std::string(c.golden) + ": output drifted with " +
                            std::to_string(threads) + " threads";
                   return false;
                 }
               }
             }
             return true;
           });

  std::printf("%d/10 checks passed\n", 10 - gate.failures);
  return gate.failures;
}
