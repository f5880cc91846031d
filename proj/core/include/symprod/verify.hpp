#pragma once

#include <symprod/free_algebra.hpp>
#include <symprod/graded_class.hpp>
#include <symprod/oracle.hpp>

#include <random>
#include <string>
#include <vector>

namespace symprod {

// Deterministic random inputs for property suites. mt19937_64 with explicit
// seeding and modulo draws keeps every sequence reproducible.
namespace testgen {

using Rng = std::mt19937_64;

inline long draw(Rng& rng, long lo, long hi) {  // inclusive bounds
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational random_rational(Rng& rng);
LaurentY random_laurent(Rng& rng, bool allow_negative_exponents = true);
GradedClass random_graded_class(Rng& rng, ClassKind kind, const std::string& label);
ClassKind random_kind(Rng& rng);
std::map<int, GradedClass> random_payloads(Rng& rng, int N, ClassKind kind);
oracle::BigradedSpace random_bigraded(Rng& rng, int max_total_dim);
ClassFunction random_class_function(Rng& rng, int n);
FreeAlgElement random_a_monomial(Rng& rng, int max_factors);

}  // namespace testgen

// Oracle-vs-engine comparison suites behind the CLI verify mode.
namespace verify {

struct Options {
  int max_n = 5;
  int trials = 10;
  unsigned long long seed = 1;
  int threads = 1;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const Options& options);
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const Options& options);

}  // namespace verify
}  // namespace symprod
