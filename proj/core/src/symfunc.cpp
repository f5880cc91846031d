#include <symprod/symfunc.hpp>

#include <memory>

namespace symprod {

PowerSumAssignment assign_all_ones() {
  return {"ones", [](int) { return std::optional<Rational>(Rational(1)); }};
}

PowerSumAssignment assign_signs() {
  return {"signs", [](int r) {
            return std::optional<Rational>(Rational(r % 2 == 1 ? 1 : -1));
          }};
}

PowerSumAssignment assign_forgetful() {
  return {"forgetful", [](int r) {
            return std::optional<Rational>(Rational(r == 1 ? 1 : 0));
          }};
}

PowerSumAssignment assign_explicit(std::map<int, Rational> values) {
  auto shared = std::make_shared<std::map<int, Rational>>(std::move(values));
  return {"explicit", [shared](int r) -> std::optional<Rational> {
            auto it = shared->find(r);
            if (it == shared->end()) return std::nullopt;
            return it->second;
          }};
}

SymFunc frobenius_char(const ClassFunction& f) {
  SymFunc out;
  for (const auto& [lambda, v] : f.values()) out.add_term(lambda, v / z_of(lambda));
  return out;
}

ClassFunction frobenius_inverse(const SymFunc& s, int n) {
  if (!s.is_homogeneous(n))
    throw std::invalid_argument("frobenius_inverse: element is not homogeneous of the given degree");
  std::map<Partition, Rational> values;
  for (const auto& lambda : enumerate_partitions(n))
    values.emplace(lambda, z_of(lambda) * s.coeff(lambda));
  return ClassFunction(n, std::move(values));
}

SymFunc schur(const Partition& mu) { return frobenius_char(irreducible_character(mu)); }

SymFunc complete_homogeneous(int n) { return frobenius_char(ClassFunction::trivial(n)); }

Rational hall_inner(const SymFunc& a, const SymFunc& b) {
  Rational acc(0);
  for (const auto& [mono, c] : a.terms()) acc += c * b.coeff(mono) * z_of(mono);
  return acc;
}

}  // namespace symprod
