#pragma once

// Polynomials in brackets of point labels: sums of rational multiples of bracket products.

#include "bracketforge/bracket_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace bracketforge {

class BracketExpr {
 public:
  using Mono = std::vector<Triple>;  // sorted; each triple strictly increasing
  using Terms = std::map<Mono, Rational>;

  BracketExpr() = default;
  static BracketExpr constant(const Rational& c);
  // Sorted with the permutation sign; zero if a label repeats.
  static BracketExpr bracket(Label a, Label b, Label c);
  // "[153][142] - [154][132]", "2[1 10 11]", "-[123]*[456]"; labels are single digits
  // unless the bracket contains spaces or commas.
  static BracketExpr parse(const std::string& s);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t degree() const;  // brackets per term (max)

  BracketExpr operator+(const BracketExpr& o) const;
  BracketExpr operator-(const BracketExpr& o) const;
  BracketExpr operator*(const BracketExpr& o) const;
  BracketExpr operator*(const Rational& s) const;
  BracketExpr operator-() const;
  BracketExpr& operator+=(const BracketExpr& o);
  bool operator==(const BracketExpr& o) const { return terms_ == o.terms_; }

  BracketPoly expand() const;
  Rational eval(const Realization& g) const;
  std::string to_string() const;
  // Scaled so the first term's coefficient is 1; used as a dedup key.
  BracketExpr monic() const;

 private:
  void add_term(Mono m, const Rational& c);
  Terms terms_;
};

std::string bracket_string(const Triple& t);

}  // namespace bracketforge
