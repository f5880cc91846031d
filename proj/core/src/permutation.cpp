#include <symprod/permutation.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symprod {

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative degree");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("permutation: image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation: degree mismatch in composition");
  std::vector<int> im(a.degree());
  for (int i = 0; i < a.degree(); ++i) im[i] = a.images_[b.images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g * (*this) * g.inverse();
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = images_[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::vector<char> seen(images_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = 1;
      continue;
    }
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      seen[j] = 1;
      j = images_[j];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

Permutation permutation_from_cycles(const std::string& text, int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative degree");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(n, 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("permutation: expected '(' in '" + text + "'");
    ++pos;
    std::vector<int> cycle;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ',') {
        ++pos;
        skip();
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("permutation: expected entry in '" + text + "'");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > n)
        throw std::invalid_argument("permutation: entry " + std::to_string(v) +
                                    " out of range for n = " + std::to_string(n));
      if (used[v - 1])
        throw std::invalid_argument("permutation: entry " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cycle.push_back(v - 1);
      skip();
    }
    if (pos >= text.size())
      throw std::invalid_argument("permutation: unbalanced '(' in '" + text + "'");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      im[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip();
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> enumerate_symmetric_group(int n, int guard) {
  check_guard(n, guard, "enumerate_symmetric_group");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Permutation> subgroup_closure(int n, const std::vector<Permutation>& generators,
                                          int guard) {
  check_guard(n, guard, "subgroup_closure");
  for (const auto& g : generators)
    if (g.degree() != n)
      throw std::invalid_argument("subgroup_closure: generator degree mismatch");
  std::set<Permutation> group;
  std::vector<Permutation> frontier;
  Permutation e = Permutation::identity(n);
  group.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Permutation y = x * g;
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return std::vector<Permutation>(group.begin(), group.end());
}

std::vector<Permutation> alternating_group(int n, int guard) {
  check_guard(n, guard, "alternating_group");
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    im[i] = i + 1;
    im[i + 1] = i + 2;
    im[i + 2] = i;
    gens.push_back(Permutation(std::move(im)));
  }
  return subgroup_closure(n, gens, guard);
}

}  // namespace symprod
