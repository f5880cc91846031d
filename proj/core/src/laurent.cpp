#include <symprod/laurent.hpp>

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace symprod {

LaurentY& LaurentY::operator+=(const LaurentY& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentY& LaurentY::operator-=(const LaurentY& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentY LaurentY::operator-() const {
  LaurentY r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentY operator*(const LaurentY& a, const LaurentY& b) {
  LaurentY r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      long e = ea + eb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
  return r;
}

LaurentY& LaurentY::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

int LaurentY::compare(const LaurentY& a, const LaurentY& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

LaurentY LaurentY::pow(long e) const {
  if (e < 0) throw std::invalid_argument("laurent: negative power");
  LaurentY acc(Rational(1));
  LaurentY base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rational LaurentY::evaluate(const Rational& value) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * rational_pow(value, e);
  return acc;
}

std::string LaurentY::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? '-' : '+');
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str();
      out << 'y';
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

LaurentY laurent_substitute(const LaurentY& f, long r) {
  if (r == 0) throw std::invalid_argument("laurent_substitute: r must be nonzero");
  LaurentY g;
  for (const auto& [e, c] : f.terms()) g.set(e * r, c);
  return g;
}

namespace {

// Tokenizer-free recursive descent over the raw string; the grammar is
// small enough that a cursor suffices.
struct LaurentParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit LaurentParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("laurent parse error at position " +
                                std::to_string(pos) + ": " + why);
  }

  std::string read_integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits_from = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_from) fail("expected integer");
    return s.substr(start, pos - start);
  }

  Rational read_rational() {
    std::string num = read_integer(false);
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::string den = read_integer(false);
      return rational_from_string(num + "/" + den);
    }
    return rational_from_string(num);
  }

  // term := rational ['*'] [y-part] | y-part ; y-part := 'y' ['^' integer]
  LaurentY read_term() {
    skip_ws();
    if (pos >= s.size()) fail("expected term");
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_rational();
      have_coeff = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos < s.size() && s[pos] == 'y') {
      ++pos;
      long exponent = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = std::strtol(read_integer(true).c_str(), nullptr, 10);
      }
      return LaurentY(coeff, exponent);
    }
    if (!have_coeff) fail("expected coefficient or 'y'");
    return LaurentY(coeff);
  }

  LaurentY parse() {
    LaurentY acc;
    skip_ws();
    bool negate = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negate = (s[pos] == '-');
      ++pos;
    }
    LaurentY t = read_term();
    acc += negate ? -t : t;
    while (!eof()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos;
      LaurentY next = read_term();
      acc += (op == '-') ? -next : next;
    }
    return acc;
  }
};

}  // namespace

LaurentY laurent_from_string(const std::string& text) {
  LaurentParser p(text);
  if (p.eof()) throw std::invalid_argument("laurent parse error: empty input");
  return p.parse();
}

}  // namespace symprod
