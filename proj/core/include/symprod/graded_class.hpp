#pragma once

#include <symprod/laurent.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace symprod {

// Which characteristic-class theory a graded class belongs to. The kind
// fixes both the coefficient ring and the homological Adams operation used
// when a class is pulled through an r-fold diagonal:
//   chern:              identity
//   todd:               degree-i component scaled by 1/r^i
//   hirzebruch_minus_y: degree-i component scaled by 1/r^i, and y -> y^r
enum class ClassKind { Chern, Todd, HirzebruchMinusY };

std::string kind_name(ClassKind k);
ClassKind kind_from_name(const std::string& name);

// Homogeneous pieces of a Borel-Moore class, indexed by homological degree i
// (the H_{2i} component). Coefficients are Laurent in y; for the chern and
// todd kinds they must be constant in y (checked on construction). The label
// names the underlying basis class of the homology model.
class GradedClass {
 public:
  GradedClass(ClassKind kind, std::map<int, LaurentY> components, std::string label);

  ClassKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::map<int, LaurentY>& components() const { return components_; }

  LaurentY component(int i) const {
    auto it = components_.find(i);
    return it == components_.end() ? LaurentY() : it->second;
  }
  int top_degree() const {
    return components_.empty() ? 0 : components_.rbegin()->first;
  }
  bool is_zero() const { return components_.empty(); }

  GradedClass scaled(const Rational& c) const;
  GradedClass renamed(std::string label) const;

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.kind_ == b.kind_ && a.label_ == b.label_ && a.components_ == b.components_;
  }
  friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

  // Deterministic total order; generator monomials sort by it.
  static int compare(const GradedClass& a, const GradedClass& b);

 private:
  ClassKind kind_;
  std::map<int, LaurentY> components_;
  std::string label_;
};

// Homological Adams operation Psi_r for the kind of c; Psi_1 = id.
GradedClass adams(int r, const GradedClass& c);

// Degree-zero piece (the scalar shadow of the class).
LaurentY degree_of(const GradedClass& c);

// A user-supplied stand-in for the homology of the base space: finitely many
// labeled basis classes. Labels are unique; classes are addressed by label.
class HomologyModel {
 public:
  explicit HomologyModel(std::vector<GradedClass> basis);

  const std::vector<GradedClass>& basis() const { return basis_; }
  const GradedClass& at(const std::string& label) const;

 private:
  std::vector<GradedClass> basis_;
};

}  // namespace symprod
