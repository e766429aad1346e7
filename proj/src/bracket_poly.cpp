#include "bracketforge/bracket_poly.hpp"

#include "bracketforge/error.hpp"

#include <algorithm>
#include <sstream>

namespace bracketforge {

BracketPoly BracketPoly::constant(const Rational& c) {
  BracketPoly p;
  p.add_term({}, c);
  return p;
}

BracketPoly BracketPoly::x(int row, Label col) {
  if (row < 1 || row > 3) throw Error(ErrorCode::InvalidArgument, "row out of range");
  BracketPoly p;
  p.add_term({x_var(row, col)}, 1);
  return p;
}

BracketPoly BracketPoly::q(int row) {
  if (row < 1 || row > 3) throw Error(ErrorCode::InvalidArgument, "row out of range");
  BracketPoly p;
  p.add_term({q_var(row)}, 1);
  return p;
}

void BracketPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BracketPoly::mentions_q() const {
  for (const auto& [m, c] : terms_)
    for (VarKey v : m)
      if (is_q_var(v)) return true;
  return false;
}

std::set<Label> BracketPoly::columns() const {
  std::set<Label> out;
  for (const auto& [m, c] : terms_)
    for (VarKey v : m)
      if (!is_q_var(v)) out.insert(static_cast<Label>(v / 4));
  return out;
}

BracketPoly BracketPoly::operator+(const BracketPoly& o) const {
  BracketPoly r = *this;
  r += o;
  return r;
}

BracketPoly& BracketPoly::operator+=(const BracketPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BracketPoly BracketPoly::operator-(const BracketPoly& o) const { return *this + (-o); }

BracketPoly BracketPoly::operator-() const {
  BracketPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BracketPoly BracketPoly::operator*(const Rational& s) const {
  if (s == 0) return {};
  BracketPoly r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

BracketPoly BracketPoly::operator*(const BracketPoly& o) const {
  BracketPoly r;
  Monomial buf;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      buf.resize(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), buf.begin());
      r.add_term(buf, ca * cb);
    }
  return r;
}

namespace {

const Rational& var_value(VarKey v, const Realization& g, const std::optional<Vec3>& q) {
  if (is_q_var(v)) {
    if (!q) throw Error(ErrorCode::InvalidArgument, "unbound q");
    return (*q)[v - kQBase];
  }
  return g[static_cast<Label>(v / 4)][v % 4];
}

}  // namespace

Rational BracketPoly::eval(const Realization& g, const std::optional<Vec3>& q) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (VarKey v : m) {
      t *= var_value(v, g, q);
      if (t == 0) break;
    }
    sum += t;
  }
  return sum;
}

BracketPoly BracketPoly::eval_points(const Realization& g) const {
  BracketPoly r;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    Monomial rest;
    for (VarKey v : m) {
      if (is_q_var(v))
        rest.push_back(v);
      else
        t *= var_value(v, g, std::nullopt);
    }
    r.add_term(rest, t);
  }
  return r;
}

BracketPoly BracketPoly::substitute_column(Label col, const std::array<BracketPoly, 3>& repl) const {
  BracketPoly r;
  for (const auto& [m, c] : terms_) {
    BracketPoly acc = constant(c);
    Monomial rest;
    for (VarKey v : m) {
      if (!is_q_var(v) && static_cast<Label>(v / 4) == col)
        acc = acc * repl[v % 4];
      else
        rest.push_back(v);
    }
    BracketPoly restp;
    restp.add_term(rest, 1);
    r += acc * restp;
  }
  return r;
}

std::string BracketPoly::serialize() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    os << a.get_str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << (i == 0 ? " * " : "*");
      if (is_q_var(m[i]))
        os << "q[" << (m[i] - kQBase + 1) << "]";
      else
        os << "x[" << (m[i] % 4 + 1) << "," << (m[i] / 4) << "]";
    }
  }
  return os.str();
}

BracketPoly BracketPoly::sign_normalized() const {
  if (terms_.empty() || terms_.rbegin()->second > 0) return *this;
  return -*this;
}

bool BracketPoly::equal_up_to_sign(const BracketPoly& o) const { return *this == o || *this == -o; }

namespace {

std::array<BracketPoly, 3> column_entries(const ColumnSym& s) {
  std::array<BracketPoly, 3> e;
  for (int r = 1; r <= 3; ++r) {
    switch (s.kind) {
      case ColumnSym::Kind::Point: e[r - 1] = BracketPoly::x(r, s.label); break;
      case ColumnSym::Kind::Const: e[r - 1] = BracketPoly::constant(s.v[r - 1]); break;
      case ColumnSym::Kind::Q: e[r - 1] = BracketPoly::q(r); break;
    }
  }
  return e;
}

}  // namespace

BracketPoly bracket(const ColumnSym& a, const ColumnSym& b, const ColumnSym& c) {
  auto A = column_entries(a), B = column_entries(b), C = column_entries(c);
  // rows (0,1,2) of columns A,B,C
  return A[0] * (B[1] * C[2] - B[2] * C[1]) - B[0] * (A[1] * C[2] - A[2] * C[1]) +
         C[0] * (A[1] * B[2] - A[2] * B[1]);
}

BracketPoly bracket(Label a, Label b, Label c) {
  return bracket(ColumnSym::point(a), ColumnSym::point(b), ColumnSym::point(c));
}

BracketPoly poly_det(const std::vector<std::vector<BracketPoly>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "poly_det of non-square matrix");
  if (n == 0) return BracketPoly::constant(1);
  if (n == 1) return m[0][0];
  BracketPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<BracketPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BracketPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    BracketPoly t = m[0][j] * poly_det(minor);
    total += (j % 2 == 0) ? t : -t;
  }
  return total;
}

}  // namespace bracketforge
