#include "bracketforge/bracket_expr.hpp"

#include "bracketforge/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bracketforge {

namespace {

// Sorts t in place; returns the permutation sign, 0 on a repeated label.
int sort_triple(Triple& t) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2 - pass; ++i)
      if (t[i] > t[i + 1]) {
        std::swap(t[i], t[i + 1]);
        sign = -sign;
      }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

}  // namespace

std::string bracket_string(const Triple& t) {
  bool compact = t[0] >= 0 && t[0] < 10 && t[1] >= 0 && t[1] < 10 && t[2] >= 0 && t[2] < 10;
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    if (i && !compact) os << ' ';
    os << t[i];
  }
  os << ']';
  return os.str();
}

void BracketExpr::add_term(Mono m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BracketExpr BracketExpr::constant(const Rational& c) {
  BracketExpr e;
  e.add_term({}, c);
  return e;
}

BracketExpr BracketExpr::bracket(Label a, Label b, Label c) {
  Triple t{a, b, c};
  int s = sort_triple(t);
  BracketExpr e;
  if (s != 0) e.add_term({t}, s);
  return e;
}

std::size_t BracketExpr::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

BracketExpr& BracketExpr::operator+=(const BracketExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BracketExpr BracketExpr::operator+(const BracketExpr& o) const {
  BracketExpr r = *this;
  r += o;
  return r;
}

BracketExpr BracketExpr::operator-() const {
  BracketExpr r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BracketExpr BracketExpr::operator-(const BracketExpr& o) const { return *this + (-o); }

BracketExpr BracketExpr::operator*(const Rational& s) const {
  if (s == 0) return {};
  BracketExpr r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

BracketExpr BracketExpr::operator*(const BracketExpr& o) const {
  BracketExpr r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

BracketPoly BracketExpr::expand() const {
  std::map<Triple, BracketPoly> cache;
  BracketPoly total;
  for (const auto& [m, c] : terms_) {
    BracketPoly t = BracketPoly::constant(c);
    for (const auto& b : m) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, bracketforge::bracket(b[0], b[1], b[2])).first;
      t = t * it->second;
    }
    total += t;
  }
  return total;
}

Rational BracketExpr::eval(const Realization& g) const {
  std::map<Triple, Rational> cache;
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& b : m) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, det3(g[b[0]], g[b[1]], g[b[2]])).first;
      t *= it->second;
      if (t == 0) break;
    }
    total += t;
  }
  return total;
}

std::string BracketExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1 || m.empty()) os << a.get_str();
    for (const auto& b : m) os << bracket_string(b);
  }
  return os.str();
}

BracketExpr BracketExpr::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.begin()->second;
  return *this * inv;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(normalize(s)) {}

  BracketExpr parse() {
    BracketExpr total;
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      total += term() * Rational(sign);
      skip();
    }
    return total;
  }

 private:
  static std::string normalize(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      // U+2212 MINUS SIGN
      if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
          static_cast<unsigned char>(s[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += s[i];
      }
    }
    return out;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  BracketExpr term() {
    BracketExpr t = BracketExpr::constant(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      t = t * parse_rational(s_.substr(start, pos_ - start));
      any = true;
      skip();
    }
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        skip();
      }
      if (peek() != '[') break;
      t = t * bracket();
      any = true;
      skip();
    }
    if (!any) fail("expected a bracket or coefficient");
    return t;
  }

  BracketExpr bracket() {
    ++pos_;  // '['
    std::size_t close = s_.find(']', pos_);
    if (close == std::string::npos) fail("unterminated bracket");
    std::string body = s_.substr(pos_, close - pos_);
    pos_ = close + 1;
    std::vector<Label> labels;
    bool spaced = body.find_first_of(" ,") != std::string::npos;
    if (spaced) {
      std::string tok;
      for (char& ch : body)
        if (ch == ',') ch = ' ';
      std::istringstream is2(body);
      while (is2 >> tok) {
        for (char ch : tok)
          if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad label '" + tok + "'");
        labels.push_back(std::stoi(tok));
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail(std::string("bad label character '") + ch + "'");
        labels.push_back(ch - '0');
      }
    }
    if (labels.size() != 3) fail("bracket needs exactly 3 labels");
    return BracketExpr::bracket(labels[0], labels[1], labels[2]);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

BracketExpr BracketExpr::parse(const std::string& s) { return ExprParser(s).parse(); }

}  // namespace bracketforge
