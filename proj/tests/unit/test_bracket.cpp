#include "bracketforge/bracket_expr.hpp"
#include "bracketforge/bracket_poly.hpp"
#include "bracketforge/error.hpp"
#include "bracketforge/fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bracketforge;

namespace {

Realization random_realization(Rng& rng, int d) {
  std::vector<Label> labels;
  std::vector<Vec3> cols;
  for (int i = 1; i <= d; ++i) {
    labels.push_back(i);
    cols.push_back(rng.vec(9));
  }
  return Realization(labels, cols);
}

BracketPoly random_poly(Rng& rng, int d) {
  BracketPoly p = BracketPoly::constant(rng.nonzero_rational());
  int terms = static_cast<int>(rng.uniform(1, 3));
  for (int t = 0; t < terms; ++t) {
    BracketPoly m = BracketPoly::constant(rng.nonzero_rational());
    int factors = static_cast<int>(rng.uniform(1, 2));
    for (int f = 0; f < factors; ++f)
      m = m * bracket(static_cast<Label>(rng.uniform(1, d)), static_cast<Label>(rng.uniform(1, d)),
                      static_cast<Label>(rng.uniform(1, d)));
    p += m;
  }
  return p;
}

}  // namespace

TEST(Bracket, SixTerms) {
  BracketPoly b = bracket(1, 2, 3);
  EXPECT_EQ(b.size(), 6u);
  for (const auto& [m, c] : b.terms()) {
    EXPECT_EQ(m.size(), 3u);
    EXPECT_TRUE(c == 1 || c == -1);
  }
  EXPECT_TRUE(bracket(1, 1, 2).is_zero());
  EXPECT_TRUE(bracket(4, 2, 4).is_zero());
}

TEST(Bracket, AlternatingSymbolic) {
  EXPECT_EQ(bracket(2, 1, 3), -bracket(1, 2, 3));
  EXPECT_EQ(bracket(1, 3, 2), -bracket(1, 2, 3));
  EXPECT_EQ(bracket(3, 1, 2), bracket(1, 2, 3));
  auto q = ColumnSym::symbolic_q();
  EXPECT_EQ(bracket(ColumnSym::point(2), q, ColumnSym::point(1)), bracket(ColumnSym::point(1), ColumnSym::point(2), q));
}

TEST(Bracket, MultilinearInConstantColumn) {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    Vec3 u = rng.vec(), v = rng.vec();
    Rational s = rng.nonzero_rational();
    auto P = ColumnSym::point;
    BracketPoly lhs = bracket(P(1), P(2), ColumnSym::constant(s * u + v));
    BracketPoly rhs = bracket(P(1), P(2), ColumnSym::constant(u)) * s + bracket(P(1), P(2), ColumnSym::constant(v));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Bracket, ConstColumnMatchesDet) {
  Rng rng(22);
  for (int t = 0; t < 10; ++t) {
    Realization g = qs_realization(rng);
    Vec3 e1 = make_vec(1, 0, 0);
    BracketPoly b = bracket(ColumnSym::point(2), ColumnSym::point(3), ColumnSym::constant(e1));
    EXPECT_EQ(b.eval(g), oracle::bracket(g[2], g[3], e1));
  }
}

TEST(Eval, Constant) {
  Realization g = Realization::zeros({1});
  EXPECT_EQ(BracketPoly::constant(Rational(5, 7)).eval(g), Rational(5, 7));
}

TEST(Eval, UnboundQ) {
  Rng rng(23);
  Realization g = random_realization(rng, 3);
  BracketPoly b = bracket(ColumnSym::point(1), ColumnSym::point(2), ColumnSym::symbolic_q());
  EXPECT_TRUE(b.mentions_q());
  EXPECT_THROW(b.eval(g), Error);
  Vec3 q = make_vec(1, 2, 3);
  EXPECT_EQ(b.eval(g, q), det3(g[1], g[2], q));
  EXPECT_EQ(b.eval_points(g).eval(g, q), b.eval(g, q));
}

TEST(Eval, HomomorphismOnRandomPairs) {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    Realization g = random_realization(rng, 5);
    BracketPoly p = random_poly(rng, 5), r = random_poly(rng, 5);
    EXPECT_EQ((p + r).eval(g), p.eval(g) + r.eval(g));
    EXPECT_EQ((p * r).eval(g), p.eval(g) * r.eval(g));
    EXPECT_EQ((p - r).eval(g), p.eval(g) - r.eval(g));
  }
}

TEST(Eval, PascalCircuitAndConcurrency) {
  Rng rng(25);
  for (int t = 0; t < 20; ++t) {
    Realization g = pascal_sample(rng);
    EXPECT_EQ(bracket(1, 6, 8).eval(g), 0);
    BracketExpr e = BracketExpr::parse("[235][678]-[635][278]");
    EXPECT_EQ(e.eval(g), 0);
    EXPECT_EQ(e.expand().eval(g), 0);
  }
}

TEST(Normalize, Idempotent) {
  Rng rng(26);
  for (int t = 0; t < 30; ++t) {
    BracketPoly p = random_poly(rng, 4);
    EXPECT_EQ(p.sign_normalized().sign_normalized(), p.sign_normalized());
    EXPECT_TRUE(p.equal_up_to_sign(-p));
    EXPECT_EQ(p.serialize(), p.serialize());
  }
  EXPECT_EQ(BracketPoly().serialize(), "0");
}

TEST(Serialize, Format) {
  BracketPoly p = BracketPoly::x(1, 2) * BracketPoly::x(3, 1) * Rational(-3, 2) + BracketPoly::q(2);
  EXPECT_EQ(p.serialize(), "-3/2 * x[3,1]*x[1,2] + 1 * q[2]");
}

TEST(BracketExpr, ParseAndExpand) {
  BracketExpr e = BracketExpr::parse("[153][142][546][326]-[154][132][536][426]");
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(e.degree(), 4u);
  BracketPoly want = bracket(1, 5, 3) * bracket(1, 4, 2) * bracket(5, 4, 6) * bracket(3, 2, 6) -
                     bracket(1, 5, 4) * bracket(1, 3, 2) * bracket(5, 3, 6) * bracket(4, 2, 6);
  EXPECT_EQ(e.expand(), want);
  EXPECT_EQ(BracketExpr::parse("2[1 10 11]"), BracketExpr::bracket(1, 10, 11) * Rational(2));
  EXPECT_EQ(BracketExpr::parse("[123]−[124]"), BracketExpr::parse("[123]-[124]"));
  EXPECT_TRUE(BracketExpr::parse("[112]").is_zero());
  EXPECT_THROW(BracketExpr::parse("[12"), Error);
}

TEST(BracketExpr, CanonicalSign) {
  EXPECT_EQ(BracketExpr::bracket(3, 1, 2), BracketExpr::bracket(1, 2, 3));
  EXPECT_EQ(BracketExpr::bracket(2, 1, 3), -BracketExpr::bracket(1, 2, 3));
  EXPECT_EQ(bracket_string({1, 5, 3}), "[153]");
  EXPECT_EQ(bracket_string({1, 10, 12}), "[1 10 12]");
}

TEST(PolyDet, MatchesLeibnizAtPoints) {
  Rng rng(27);
  std::vector<std::vector<BracketPoly>> m(3, std::vector<BracketPoly>(3));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = BracketPoly::x(r + 1, c + 1);
  EXPECT_EQ(poly_det(m), bracket(1, 2, 3));
}
