#pragma once

// Grassmann-Cayley algebra over a 3-space on point symbols.

#include "bracketforge/bracket_expr.hpp"
#include "bracketforge/config.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bracketforge {

class GCExpr {
 public:
  using Extensor = std::vector<Label>;  // strictly increasing
  using Terms = std::map<Extensor, BracketExpr>;

  GCExpr() = default;
  static GCExpr point(Label p);
  static GCExpr scalar(const BracketExpr& s);
  // Empty of the given grade; add() normalises extensor order with sign.
  static GCExpr zero(int grade);
  void add(Extensor e, BracketExpr c);

  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GCExpr operator+(const GCExpr& o) const;
  GCExpr operator*(const BracketExpr& s) const;

  // Grade 0 or 3 only: the bracket polynomial it stands for.
  BracketExpr flatten() const;
  // Grade 1 only.
  Vec3 eval_vector(const Realization& g) const;
  std::string to_string() const;

 private:
  int grade_ = 0;
  Terms terms_;
};

// Grades must sum to at most 3.
GCExpr join(const GCExpr& a, const GCExpr& b);
// Shuffle formula specialised to dimension 3; zero when the grades sum to less than 3.
// For lines: ab ^ cd = [acd] b - [bcd] a.
GCExpr meet(const GCExpr& a, const GCExpr& b);

// Operators v / ∨ (join) and ^ / ∧ (meet) share one precedence and associate left.
// A run of digits joins single-digit points ("15" is 1 v 5); {10} names a larger label.
GCExpr parse_gc(const std::string& s);

using PointPair = std::pair<Label, Label>;

// flatten((l1 ^ l2) v l3).
BracketPoly concurrency_poly(PointPair l1, PointPair l2, PointPair l3);
BracketExpr concurrency_expr(PointPair l1, PointPair l2, PointPair l3);

// Replace every occurrence of x by [p1 p2 p3] p4 - [p1 p2 p4] p3.
// With cfg given, {x,p1,p2} and {x,p3,p4} must lie on two distinct lines of cfg.
BracketExpr gm_rewrite(const BracketExpr& p, Label x, PointPair l1, PointPair l2, const Config* cfg = nullptr);
BracketPoly gm_rewrite(const BracketPoly& p, Label x, PointPair l1, PointPair l2, const Config* cfg = nullptr);

struct GMOptions {
  std::size_t depth = 2;
  std::size_t max_terms = 64;  // bracket-level terms per polynomial
};

// X_0 = circuit brackets, X_{j+1} = X_j plus all single-variable rewrites; returns X_depth.
// Deduplicated up to scalar, insertion order.
std::vector<BracketExpr> gm_generators(const Config& cfg, const GMOptions& opt = {});

}  // namespace bracketforge
