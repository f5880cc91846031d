#include <symprod/graded_class.hpp>

#include <stdexcept>

namespace symprod {

std::string kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Chern: return "chern";
    case ClassKind::Todd: return "todd";
    case ClassKind::HirzebruchMinusY: return "hirzebruch_minus_y";
  }
  throw std::logic_error("kind_name: unknown kind");
}

ClassKind kind_from_name(const std::string& name) {
  if (name == "chern") return ClassKind::Chern;
  if (name == "todd") return ClassKind::Todd;
  if (name == "hirzebruch_minus_y" || name == "hirzebruch") return ClassKind::HirzebruchMinusY;
  throw std::invalid_argument("unknown class kind '" + name + "'");
}

GradedClass::GradedClass(ClassKind kind, std::map<int, LaurentY> components, std::string label)
    : kind_(kind), components_(std::move(components)), label_(std::move(label)) {
  for (auto it = components_.begin(); it != components_.end();) {
    if (it->first < 0)
      throw std::invalid_argument("graded class: negative homological degree");
    if (kind_ != ClassKind::HirzebruchMinusY && !it->second.is_constant())
      throw std::invalid_argument("graded class: y-dependent coefficient in a " +
                                  kind_name(kind_) + " class");
    it = it->second.is_zero() ? components_.erase(it) : std::next(it);
  }
}

GradedClass GradedClass::scaled(const Rational& c) const {
  std::map<int, LaurentY> comp;
  if (c != 0)
    for (const auto& [i, v] : components_) comp.emplace(i, v * c);
  return GradedClass(kind_, std::move(comp), label_);
}

GradedClass GradedClass::renamed(std::string label) const {
  return GradedClass(kind_, components_, std::move(label));
}

int GradedClass::compare(const GradedClass& a, const GradedClass& b) {
  if (a.label_ != b.label_) return a.label_ < b.label_ ? -1 : 1;
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
  auto ia = a.components_.begin(), ib = b.components_.begin();
  for (; ia != a.components_.end() && ib != b.components_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = LaurentY::compare(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.components_.end()) return 1;
  if (ib != b.components_.end()) return -1;
  return 0;
}

GradedClass adams(int r, const GradedClass& c) {
  if (r < 1) throw std::invalid_argument("adams: r must be positive");
  if (c.kind() == ClassKind::Chern || r == 1) return c;
  std::map<int, LaurentY> comp;
  for (const auto& [i, v] : c.components()) {
    LaurentY w = (c.kind() == ClassKind::HirzebruchMinusY) ? laurent_substitute(v, r) : v;
    comp.emplace(i, w * (Rational(1) / rational_pow(Rational(r), i)));
  }
  return GradedClass(c.kind(), std::move(comp), c.label());
}

LaurentY degree_of(const GradedClass& c) { return c.component(0); }

HomologyModel::HomologyModel(std::vector<GradedClass> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (basis_[i].label() == basis_[j].label())
        throw std::invalid_argument("homology model: duplicate label '" + basis_[i].label() + "'");
}

const GradedClass& HomologyModel::at(const std::string& label) const {
  for (const auto& c : basis_)
    if (c.label() == label) return c;
  throw std::invalid_argument("homology model: no class labeled '" + label + "'");
}

}  // namespace symprod
