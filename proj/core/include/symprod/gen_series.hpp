#pragma once

#include <symprod/class_function.hpp>
#include <symprod/free_algebra.hpp>
#include <symprod/series.hpp>

#include <map>

namespace symprod {

// ---------------------------------------------------------------------------
// Class-level series (free delocalized algebra coefficients).
// ---------------------------------------------------------------------------

// exp(sum_{r<=N} A_r(b_r) t^r / r). The t^n coefficient equals the sum of
// class_for_sigma(b, lambda) over the partitions of n.
TruncSeries<FreeAlgElement> abstract_series(const std::map<int, GradedClass>& b, int N);

// abstract_series with the Adams-twisted payloads b_r = psi_r(cl).
TruncSeries<FreeAlgElement> equivariant_class_series(const GradedClass& cl, int N);

// Keeps only monomials built from weight-1 generators; on the equivariant
// series this is exp(t * A_1(cl)).
TruncSeries<FreeAlgElement> identity_projection(const TruncSeries<FreeAlgElement>& s);

// exp(sum_{r<=N} p_r D_r(psi_r cl) t^r / r); equals the pushforward of the
// equivariant series coefficient by coefficient.
TruncSeries<FreeAlgElement> symmetric_product_series(const GradedClass& cl, int N);

enum class PowerVariant { Symmetric, Alternating, Forgetful };

// Power-sum specializations of symmetric_product_series:
//   Symmetric   p_r -> 1
//   Alternating p_r -> (-1)^{r-1}
//   Forgetful   p_1 -> 1, p_{r>=2} -> 0, coefficients rescaled by n! so the
//               stored t^n entry reads against t^n/n!; equals D_1(cl)^n.
TruncSeries<FreeAlgElement> power_series_variant(const GradedClass& cl, int N, PowerVariant v);

// sum_{lambda of n} (p_lambda / z_lambda) chi_lambda(V) prod_r D_r(psi_r cl)^{k_r}.
FreeAlgElement twisted_class(int n, const ClassFunction& v, const GradedClass& cl);

// twisted_class at V = chi_mu, specialized p -> 1.
FreeAlgElement schur_class(int n, const Partition& mu, const GradedClass& cl);

// Checks sum_{mu of n} s_mu * schur_class(n, mu, cl) against the t^n
// coefficient of symmetric_product_series, exactly.
bool schur_decomposition_check(int n, const GradedClass& cl);

// ---------------------------------------------------------------------------
// Degree-level genus series (LaurentY scalars).
// ---------------------------------------------------------------------------

enum class DegreeVariant { Symmetric, Alternating };

// exp(sum_r chi(y^r) t^r / r), resp. exp(-sum_r chi(y^r) (-t)^r / r), where
// chi(y^r) is laurent_substitute(chi, r).
TruncSeries<LaurentY> degree_symmetric_series(const LaurentY& chi, int N,
                                              DegreeVariant variant = DegreeVariant::Symmetric);

// sum_{lambda of n} (1/z_lambda) chi_lambda(Ind_K(triv)) prod_r chi(y^r)^{k_r};
// the genus of the K-quotient of the n-th power.
LaurentY quotient_genus(int n, const std::vector<Permutation>& subgroup, const LaurentY& chi,
                        int guard = default_guard_n());

// sum_{lambda of n} (p_lambda / z_lambda) chi_lambda(V) prod_r chi(y^r)^{k_r}.
YSymFunc twisted_genus(int n, const ClassFunction& v, const LaurentY& chi);

// twisted_genus with every p_r -> 1.
LaurentY twisted_genus_scalar(int n, const ClassFunction& v, const LaurentY& chi);

// ---------------------------------------------------------------------------
// Orbifold-flavored series.
// ---------------------------------------------------------------------------

// exp(sum_{r<=N} (j_r / r) t^r A_r(c)) for a sequence j of subgroup counts.
TruncSeries<FreeAlgElement> ohmoto_series(const std::map<int, Rational>& j, const GradedClass& c,
                                          int N);

// Scalar shadow exp(sum_{r<=N} j_r e t^r / r).
TruncSeries<Rational> ohmoto_scalar_series(const std::map<int, Rational>& j, const Rational& e,
                                           int N);

// Built-in j sequences: index-r subgroup counts of Z (all 1) and of Z^2
// (divisor sums sigma_1).
std::map<int, Rational> j_constant_one(int N);
std::map<int, Rational> j_divisor_sum(int N);

// (1/n!) sum over commuting pairs in S_n of e^{#orbits of <sigma,tau>}.
// Brute force; guarded (default 6).
Rational orbifold_euler(int n, const Rational& e, int guard = 6);

}  // namespace symprod
