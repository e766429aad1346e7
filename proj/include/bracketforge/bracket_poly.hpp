#pragma once

// Sparse polynomials over Q in the matrix variables x[r,c] and the q-coordinates.

#include "bracketforge/realization.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bracketforge {

// Variable key: x[r,c] -> c*4 + (r-1), q_r -> kQBase + r - 1, so (column, row) order with q last.
using VarKey = std::uint32_t;
inline constexpr VarKey kQBase = 0xFFFFFF00u;
inline VarKey x_var(int row, Label col) { return static_cast<VarKey>(col) * 4u + static_cast<VarKey>(row - 1); }
inline VarKey q_var(int row) { return kQBase + static_cast<VarKey>(row - 1); }
inline bool is_q_var(VarKey v) { return v >= kQBase; }

using Monomial = std::vector<VarKey>;  // sorted multiset

// Graded lexicographic.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class BracketPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  BracketPoly() = default;
  static BracketPoly constant(const Rational& c);
  static BracketPoly x(int row, Label col);
  static BracketPoly q(int row);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool mentions_q() const;
  std::set<Label> columns() const;

  BracketPoly operator+(const BracketPoly& o) const;
  BracketPoly operator-(const BracketPoly& o) const;
  BracketPoly operator*(const BracketPoly& o) const;
  BracketPoly operator*(const Rational& s) const;
  BracketPoly operator-() const;
  BracketPoly& operator+=(const BracketPoly& o);
  bool operator==(const BracketPoly& o) const { return terms_ == o.terms_; }

  // Throws InvalidArgument on an unbound column or an unbound q.
  Rational eval(const Realization& g, const std::optional<Vec3>& q = std::nullopt) const;
  // Substitutes the point columns only; q stays symbolic.
  BracketPoly eval_points(const Realization& g) const;
  // Replaces x[r,c] by repl[r-1] for r = 1..3.
  BracketPoly substitute_column(Label c, const std::array<BracketPoly, 3>& repl) const;

  // "c * x[r,c]*x[r,c] + ..." in graded-lex order, "0" for the zero polynomial.
  std::string serialize() const;
  // Negated if needed so the largest monomial has a positive coefficient.
  BracketPoly sign_normalized() const;
  bool equal_up_to_sign(const BracketPoly& o) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

struct ColumnSym {
  enum class Kind { Point, Const, Q };
  Kind kind = Kind::Point;
  Label label = 0;
  Vec3 v{};
  static ColumnSym point(Label l) { return {Kind::Point, l, {}}; }
  static ColumnSym constant(const Vec3& v) { return {Kind::Const, 0, v}; }
  static ColumnSym symbolic_q() { return {Kind::Q, 0, {}}; }
};

// Expanded 3x3 determinant of the named columns.
BracketPoly bracket(const ColumnSym& a, const ColumnSym& b, const ColumnSym& c);
BracketPoly bracket(Label a, Label b, Label c);

// Laplace expansion; for small matrices only.
BracketPoly poly_det(const std::vector<std::vector<BracketPoly>>& m);

}  // namespace bracketforge
