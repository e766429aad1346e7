#include "bracketforge/gc.hpp"

#include "bracketforge/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace bracketforge {

namespace {

// Sort labels, tracking the sign; 0 if a label repeats.
int sort_signed(std::vector<Label>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

BracketExpr bracket_of(const std::vector<Label>& v) { return BracketExpr::bracket(v[0], v[1], v[2]); }

}  // namespace

void GCExpr::add(Extensor e, BracketExpr c) {
  int s = sort_signed(e);
  if (s == 0 || c.is_zero()) return;
  if (s < 0) c = -c;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GCExpr GCExpr::point(Label p) {
  GCExpr g;
  g.grade_ = 1;
  g.add({p}, BracketExpr::constant(1));
  return g;
}

GCExpr GCExpr::zero(int grade) {
  GCExpr g;
  g.grade_ = grade;
  return g;
}

GCExpr GCExpr::scalar(const BracketExpr& s) {
  GCExpr g;
  g.grade_ = 0;
  g.add({}, s);
  return g;
}

GCExpr GCExpr::operator+(const GCExpr& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (grade_ != o.grade_) throw Error(ErrorCode::InvalidArgument, "sum of GC terms of different grade");
  GCExpr r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

GCExpr GCExpr::operator*(const BracketExpr& s) const {
  GCExpr r;
  r.grade_ = grade_;
  for (const auto& [e, c] : terms_) r.add(e, c * s);
  return r;
}

BracketExpr GCExpr::flatten() const {
  if (grade_ != 0 && grade_ != 3)
    throw Error(ErrorCode::InvalidArgument, "only grade 0 or 3 expressions flatten to a polynomial");
  BracketExpr out;
  for (const auto& [e, c] : terms_) out += grade_ == 0 ? c : c * bracket_of(e);
  return out;
}

Vec3 GCExpr::eval_vector(const Realization& g) const {
  if (grade_ != 1) throw Error(ErrorCode::InvalidArgument, "eval_vector needs a grade-1 expression");
  Vec3 v = make_vec(0, 0, 0);
  for (const auto& [e, c] : terms_) v = v + c.eval(g) * g[e[0]];
  return v;
}

std::string GCExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (Label l : e) os << ' ' << l;
  }
  return os.str();
}

GCExpr join(const GCExpr& a, const GCExpr& b) {
  if (a.grade() + b.grade() > 3) throw Error(ErrorCode::InvalidArgument, "join grades exceed 3");
  GCExpr r = GCExpr::zero(a.grade() + b.grade());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<Label> e = ea;
      e.insert(e.end(), eb.begin(), eb.end());
      r.add(std::move(e), ca * cb);
    }
  return r;
}

GCExpr meet(const GCExpr& a, const GCExpr& b) {
  const int j = a.grade(), k = b.grade();
  if (j + k < 3) return GCExpr::zero(0);
  GCExpr r = GCExpr::zero(j + k - 3);
  const std::size_t take = static_cast<std::size_t>(3 - k);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      // Every order-preserving split of a's extensor into (s | t) with |s| = 3 - k.
      std::vector<bool> mask(ea.size(), false);
      std::fill(mask.begin(), mask.begin() + static_cast<long>(take), true);
      do {
        std::vector<Label> s, t;
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < ea.size(); ++i)
          if (mask[i]) {
            s.push_back(ea[i]);
            order.push_back(i);
          }
        for (std::size_t i = 0; i < ea.size(); ++i)
          if (!mask[i]) {
            t.push_back(ea[i]);
            order.push_back(i);
          }
        int sign = 1;
        for (std::size_t x = 0; x < order.size(); ++x)
          for (std::size_t y = x + 1; y < order.size(); ++y)
            if (order[x] > order[y]) sign = -sign;
        std::vector<Label> br = s;
        br.insert(br.end(), eb.begin(), eb.end());
        r.add(t, ca * cb * bracket_of(br) * Rational(sign));
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  return r;
}

namespace {

class GCParser {
 public:
  explicit GCParser(const std::string& s) : s_(normalize(s)) {}

  GCExpr parse() {
    GCExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return e;
  }

 private:
  static std::string normalize(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto u = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
      if (i + 2 < s.size() && u(i) == 0xE2 && u(i + 1) == 0x88 && (u(i + 2) == 0xA7 || u(i + 2) == 0xA8)) {
        out += u(i + 2) == 0xA7 ? '^' : 'v';  // ∧ ∨
        i += 2;
      } else {
        out += s[i];
      }
    }
    return out;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  GCExpr expr() {
    GCExpr lhs = atom();
    for (;;) {
      char c = peek();
      if (c == 'v') {
        ++pos_;
        lhs = join(lhs, atom());
      } else if (c == '^') {
        ++pos_;
        lhs = meet(lhs, atom());
      } else {
        return lhs;
      }
    }
  }

  GCExpr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      GCExpr e = expr();
      if (peek() != ')') fail("expected )");
      ++pos_;
      return e;
    }
    std::vector<Label> pts;
    while (pos_ < s_.size()) {
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        pts.push_back(ch - '0');
        ++pos_;
      } else if (ch == '{') {
        std::size_t close = s_.find('}', pos_);
        if (close == std::string::npos) fail("unterminated {");
        std::string body = s_.substr(pos_ + 1, close - pos_ - 1);
        if (body.empty() || !std::all_of(body.begin(), body.end(), [](char x) { return std::isdigit(static_cast<unsigned char>(x)); }))
          fail("bad label {" + body + "}");
        pts.push_back(std::stoi(body));
        pos_ = close + 1;
      } else {
        break;
      }
    }
    if (pts.empty()) fail("expected a point or (");
    if (pts.size() > 3) fail("extensor of more than three points");
    GCExpr e = GCExpr::point(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) e = join(e, GCExpr::point(pts[i]));
    return e;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

void check_pair(PointPair l) {
  if (l.first == l.second) throw Error(ErrorCode::Degenerate, "degenerate line spec");
}

GCExpr line(PointPair l) { return join(GCExpr::point(l.first), GCExpr::point(l.second)); }

void check_rewrite(Label x, PointPair l1, PointPair l2, const Config* cfg) {
  check_pair(l1);
  check_pair(l2);
  std::set<Label> s1{l1.first, l1.second}, s2{l2.first, l2.second};
  if (s1 == s2) throw Error(ErrorCode::InvalidArgument, "l1 = l2");
  if (s1.count(x) || s2.count(x)) throw Error(ErrorCode::InvalidArgument, "line points must differ from x");
  if (!cfg) return;
  auto line_of = [&](PointPair l) -> long {
    for (std::size_t i = 0; i < cfg->lines().size(); ++i) {
      const auto& L = cfg->lines()[i];
      auto has = [&](Label p) { return std::binary_search(L.begin(), L.end(), p); };
      if (has(x) && has(l.first) && has(l.second)) return static_cast<long>(i);
    }
    return -1;
  };
  long a = line_of(l1), b = line_of(l2);
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "x not on both lines");
  if (a == b) throw Error(ErrorCode::InvalidArgument, "l1 = l2");
}

}  // namespace

GCExpr parse_gc(const std::string& s) { return GCParser(s).parse(); }

BracketExpr concurrency_expr(PointPair l1, PointPair l2, PointPair l3) {
  check_pair(l1);
  check_pair(l2);
  check_pair(l3);
  return join(meet(line(l1), line(l2)), line(l3)).flatten();
}

BracketPoly concurrency_poly(PointPair l1, PointPair l2, PointPair l3) {
  return concurrency_expr(l1, l2, l3).expand();
}

BracketExpr gm_rewrite(const BracketExpr& p, Label x, PointPair l1, PointPair l2, const Config* cfg) {
  check_rewrite(x, l1, l2, cfg);
  const auto [p1, p2] = l1;
  const auto [p3, p4] = l2;
  BracketExpr c3 = BracketExpr::bracket(p1, p2, p3), c4 = BracketExpr::bracket(p1, p2, p4);
  bool found = false;
  BracketExpr out;
  for (const auto& [mono, coeff] : p.terms()) {
    BracketExpr t = BracketExpr::constant(coeff);
    for (const auto& b : mono) {
      auto it = std::find(b.begin(), b.end(), x);
      if (it == b.end()) {
        t = t * BracketExpr::bracket(b[0], b[1], b[2]);
        continue;
      }
      found = true;
      Triple with4 = b, with3 = b;
      with4[static_cast<std::size_t>(it - b.begin())] = p4;
      with3[static_cast<std::size_t>(it - b.begin())] = p3;
      t = t * (c3 * BracketExpr::bracket(with4[0], with4[1], with4[2]) -
               c4 * BracketExpr::bracket(with3[0], with3[1], with3[2]));
    }
    out += t;
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "x does not appear in the polynomial");
  return out;
}

BracketPoly gm_rewrite(const BracketPoly& p, Label x, PointPair l1, PointPair l2, const Config* cfg) {
  check_rewrite(x, l1, l2, cfg);
  if (!p.columns().count(x)) throw Error(ErrorCode::InvalidArgument, "x does not appear in the polynomial");
  const auto [p1, p2] = l1;
  const auto [p3, p4] = l2;
  BracketPoly c3 = bracket(p1, p2, p3), c4 = bracket(p1, p2, p4);
  std::array<BracketPoly, 3> repl;
  for (int r = 1; r <= 3; ++r) repl[r - 1] = c3 * BracketPoly::x(r, p4) - c4 * BracketPoly::x(r, p3);
  return p.substitute_column(x, repl);
}

std::vector<BracketExpr> gm_generators(const Config& cfg, const GMOptions& opt) {
  std::vector<BracketExpr> out;
  std::set<std::string> seen;
  auto admit = [&](const BracketExpr& e) {
    if (e.is_zero() || e.size() > opt.max_terms) return false;
    std::string key = e.monic().to_string();
    if (!seen.insert(key).second) return false;
    out.push_back(e);
    return true;
  };
  for (const auto& t : circuits3(cfg)) admit(BracketExpr::bracket(t[0], t[1], t[2]));

  std::size_t frontier_begin = 0;
  for (std::size_t level = 0; level < opt.depth; ++level) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      std::set<Label> cols;
      for (const auto& [m, c] : out[i].terms())
        for (const auto& b : m) cols.insert(b.begin(), b.end());
      for (Label x : cols) {
        auto through = cfg.lines_through(x);
        for (std::size_t a = 0; a < through.size(); ++a)
          for (std::size_t b = a + 1; b < through.size(); ++b) {
            std::vector<Label> A, B;
            for (Label p : cfg.lines()[through[a]])
              if (p != x) A.push_back(p);
            for (Label p : cfg.lines()[through[b]])
              if (p != x) B.push_back(p);
            for (std::size_t i1 = 0; i1 < A.size(); ++i1)
              for (std::size_t i2 = i1 + 1; i2 < A.size(); ++i2)
                for (std::size_t j1 = 0; j1 < B.size(); ++j1)
                  for (std::size_t j2 = j1 + 1; j2 < B.size(); ++j2)
                    admit(gm_rewrite(out[i], x, {A[i1], A[i2]}, {B[j1], B[j2]}));
          }
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace bracketforge
