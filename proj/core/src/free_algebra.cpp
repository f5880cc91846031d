#include <symprod/free_algebra.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symprod {

std::string family_name(GenFamily f) {
  switch (f) {
    case GenFamily::A: return "A";
    case GenFamily::D: return "D";
    case GenFamily::Delta: return "Delta";
  }
  throw std::logic_error("family_name: unknown family");
}

GenFamily family_from_name(const std::string& name) {
  if (name == "A") return GenFamily::A;
  if (name == "D") return GenFamily::D;
  if (name == "Delta") return GenFamily::Delta;
  throw std::invalid_argument("unknown generator family '" + name + "'");
}

int Generator::compare(const Generator& a, const Generator& b) {
  if (a.family != b.family) return a.family < b.family ? -1 : 1;
  if (a.r != b.r) return a.r < b.r ? -1 : 1;
  return GradedClass::compare(a.payload, b.payload);
}

std::string Generator::display() const {
  std::ostringstream out;
  out << family_name(family) << r << '(' << payload.label() << ')';
  return out.str();
}

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& g : m) w += g.r;
  return w;
}

std::string monomial_key(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << '*';
    out << m[i].display();
  }
  return out.str();
}

FreeAlgElement::FreeAlgElement(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, YSymFunc(c));
}

FreeAlgElement::FreeAlgElement(const YSymFunc& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Monomial{}, scalar);
}

FreeAlgElement::FreeAlgElement(Monomial mono, YSymFunc coeff) {
  if (!std::is_sorted(mono.begin(), mono.end()))
    std::sort(mono.begin(), mono.end());
  if (!coeff.is_zero()) terms_.emplace(std::move(mono), std::move(coeff));
}

YSymFunc FreeAlgElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? YSymFunc() : it->second;
}

void FreeAlgElement::add_term(Monomial mono, const YSymFunc& c) {
  if (c.is_zero()) return;
  if (!std::is_sorted(mono.begin(), mono.end()))
    std::sort(mono.begin(), mono.end());
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(std::move(mono), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeAlgElement& FreeAlgElement::operator+=(const FreeAlgElement& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

FreeAlgElement FreeAlgElement::operator-() const {
  FreeAlgElement r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c * Rational(-1));
  return r;
}

FreeAlgElement operator*(const FreeAlgElement& a, const FreeAlgElement& b) {
  FreeAlgElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial merged;
      merged.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      r.add_term(std::move(merged), ca * cb);
    }
  return r;
}

FreeAlgElement operator*(FreeAlgElement a, const Rational& c) {
  if (c == 0) return FreeAlgElement();
  for (auto& [mono, v] : a.terms_) v = v * c;
  return a;
}

FreeAlgElement operator*(const FreeAlgElement& a, const YSymFunc& s) {
  FreeAlgElement r;
  for (const auto& [mono, c] : a.terms_) r.add_term(mono, c * s);
  return r;
}

std::optional<int> FreeAlgElement::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [mono, c] : terms_) {
    int mw = monomial_weight(mono);
    if (!w)
      w = mw;
    else if (*w != mw)
      return std::nullopt;
  }
  return w ? w : std::optional<int>(0);
}

std::map<int, FreeAlgElement> FreeAlgElement::weight_parts() const {
  std::map<int, FreeAlgElement> parts;
  for (const auto& [mono, c] : terms_) parts[monomial_weight(mono)].add_term(mono, c);
  return parts;
}

FreeAlgElement creation(int r, const GradedClass& c) {
  if (r < 1) throw std::invalid_argument("creation: weight must be positive");
  if (c.is_zero()) return FreeAlgElement();
  return FreeAlgElement(Monomial{Generator{GenFamily::A, r, c}}, YSymFunc(Rational(1)));
}

FreeAlgElement class_for_sigma(const std::map<int, GradedClass>& b, const Partition& lambda) {
  Monomial mono;
  Rational coeff(1);
  for (const auto& [r, k] : lambda.multiplicities()) {
    auto it = b.find(r);
    if (it == b.end())
      throw std::invalid_argument("class_for_sigma: no payload for weight " + std::to_string(r));
    if (it->second.is_zero()) return FreeAlgElement();
    for (int j = 0; j < k; ++j) mono.push_back(Generator{GenFamily::A, r, it->second});
    coeff /= factorial(k) * rational_pow(Rational(r), k);
  }
  return FreeAlgElement(std::move(mono), YSymFunc(coeff));
}

namespace {

FreeAlgElement map_a_generators(const FreeAlgElement& x, GenFamily target, bool attach_p,
                                const char* op) {
  FreeAlgElement out;
  for (const auto& [mono, c] : x.terms()) {
    Monomial mapped;
    mapped.reserve(mono.size());
    Partition p_part;
    for (const auto& g : mono) {
      if (g.family != GenFamily::A)
        throw std::invalid_argument(std::string(op) + ": input must lie in the A-family algebra");
      mapped.push_back(Generator{target, g.r, g.payload});
      if (attach_p) p_part = p_part.merged_with(Partition({g.r}));
    }
    YSymFunc coeff = attach_p ? c * YSymFunc::p_monomial(p_part) : c;
    out.add_term(std::move(mapped), coeff);
  }
  return out;
}

}  // namespace

FreeAlgElement pushforward_pi(const FreeAlgElement& x) {
  return map_a_generators(x, GenFamily::D, true, "pushforward_pi");
}

FreeAlgElement average_F(const FreeAlgElement& x) {
  return map_a_generators(x, GenFamily::Delta, true, "average_F");
}

FreeAlgElement average(const FreeAlgElement& x) {
  return specialize_pont(average_F(x), assign_all_ones());
}

FreeAlgElement specialize_pont(const FreeAlgElement& x, const PowerSumAssignment& a) {
  FreeAlgElement out;
  for (const auto& [mono, c] : x.terms()) {
    LaurentY value = specialize_p(c, a);
    if (value.is_zero()) continue;
    out.add_term(mono, YSymFunc(Partition(), value));
  }
  return out;
}

FreeAlgElement twisted_multiply(const FreeAlgElement& x, const FreeAlgElement& y) {
  FreeAlgElement out;
  for (const auto& [n, xn] : x.weight_parts())
    for (const auto& [m, ym] : y.weight_parts()) {
      Rational scale = factorial(n) * factorial(m) / factorial(n + m);
      out += (xn * ym) * scale;
    }
  return out;
}

FreeAlgElement relabel_family(const FreeAlgElement& x, GenFamily from, GenFamily to) {
  FreeAlgElement out;
  for (const auto& [mono, c] : x.terms()) {
    Monomial mapped;
    mapped.reserve(mono.size());
    for (const auto& g : mono)
      mapped.push_back(Generator{g.family == from ? to : g.family, g.r, g.payload});
    out.add_term(std::move(mapped), c);
  }
  return out;
}

}  // namespace symprod
