#include <symprod/partition.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symprod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition: parts must be sorted descending");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  return mult;
}

Partition Partition::from_multiplicities(const std::map<int, int>& mult) {
  std::vector<int> parts;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    if (it->second < 0) throw std::invalid_argument("partition: negative multiplicity");
    if (it->first <= 0 && it->second != 0)
      throw std::invalid_argument("partition: parts must be positive");
    parts.insert(parts.end(), it->second, it->first);
  }
  return Partition(std::move(parts));
}

Partition Partition::merged_with(const Partition& o) const {
  std::vector<int> parts;
  parts.reserve(parts_.size() + o.parts_.size());
  std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
             std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first with non-increasing parts emits reverse-lexicographic order.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Rational z_of(const Partition& lambda) {
  Rational z(1);
  for (const auto& [r, k] : lambda.multiplicities())
    z *= rational_pow(Rational(r), k) * factorial(k);
  return z;
}

int length_of(const Partition& lambda) { return lambda.length(); }

Partition partition_from_string(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']')
      throw std::invalid_argument("partition: unbalanced brackets in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    std::size_t end = item.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(item[end - 1]))) --end;
    if (pos == end) throw std::invalid_argument("partition: empty entry in '" + text + "'");
    std::size_t used = 0;
    int value = std::stoi(item.substr(pos, end - pos), &used);
    if (used != end - pos) throw std::invalid_argument("partition: bad entry in '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

}  // namespace symprod
