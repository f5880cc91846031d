#pragma once

#include <symprod/class_function.hpp>
#include <symprod/free_algebra.hpp>
#include <symprod/laurent.hpp>
#include <symprod/partition.hpp>
#include <symprod/permutation.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace symprod {
namespace oracle {

// Finite-dimensional bigraded model of a cohomology: dimension of the piece
// in (cohomological degree i, weight p). i >= 0; p may be any integer.
class BigradedSpace {
 public:
  explicit BigradedSpace(std::map<std::pair<int, int>, int> dims);

  const std::map<std::pair<int, int>, int>& dims() const { return dims_; }
  int total_dim() const;

  // chi_{-y}: sum (-1)^i dim(i, p) y^p.
  LaurentY chi_y() const;

 private:
  std::map<std::pair<int, int>, int> dims_;
};

// The projective-line model: one even class in (0,0), one in (2,1);
// chi_y = 1 + y.
BigradedSpace projective_line_model();

enum class TraceRoute { Dense, CycleWalk, Automatic };

// Graded trace of the permutation action on W^{tensor n} (Koszul signs on
// odd cohomological degrees), reported as sum_{I,P} (-1)^I trace y^P.
// Dense route: explicit enumeration of the d^n tuple basis, sign counted
// per inversion. CycleWalk route: per-cycle factorization. The dense route
// is the reference; guard: n <= 5 and dim(W)^n <= 10^4.
LaurentY kunneth_trace(const BigradedSpace& w, const Permutation& sigma,
                       TraceRoute route = TraceRoute::Automatic);

// Trace against a twisting class function: chi(V)(sigma) * kunneth_trace.
LaurentY kunneth_trace_twisted(const BigradedSpace& w, const Permutation& sigma,
                               const ClassFunction& v, TraceRoute route = TraceRoute::Automatic);

// (1/|K|) sum_{g in K} kunneth_trace(w, g): the invariant-part genus.
LaurentY invariant_trace(const BigradedSpace& w, const std::vector<Permutation>& subgroup,
                         TraceRoute route = TraceRoute::Automatic);

// (1/|G|) sum_{g} chi(V)(g) * kunneth_trace(w, g) over all of S_n.
LaurentY averaged_twisted_trace(const BigradedSpace& w, int n, const ClassFunction& v,
                                int guard = default_guard_n(),
                                TraceRoute route = TraceRoute::Automatic);

// sum over partitions of n of class_for_sigma(b, lambda): the t^n
// coefficient of the generating series computed without the exponential.
FreeAlgElement direct_conjugacy_sum(const std::map<int, GradedClass>& b, int n);

// Coefficients 0..N of prod_{r>=1} (1 - t^r)^{-e} for a non-negative
// integer e, computed by plain polynomial multiplication of the binomial
// expansions (no shared series code).
std::vector<Rational> euler_product_coefficients(int e, int N);

// Number of index-r subgroups of Z^d, counted by literally enumerating
// upper-triangular Hermite normal forms with determinant r
// (diagonal a_1..a_d >= 1, product r; entries right of the diagonal in
// column j reduced mod a_j). d in {1,2,3}, r <= 200.
std::int64_t count_index_subgroups(int d, int r);

}  // namespace oracle
}  // namespace symprod
