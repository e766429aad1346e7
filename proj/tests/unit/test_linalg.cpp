#include "bracketforge/error.hpp"
#include "bracketforge/fixtures.hpp"
#include "bracketforge/linalg.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bracketforge;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range = 5) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rng.uniform(-range, range), rng.uniform(1, 3));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
  return m;
}

oracle::Mat to_mat(const Matrix& m) {
  oracle::Mat out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST(Rational, ParseCanonical) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Det3, IdentityAndRepeats) {
  EXPECT_EQ(det3(make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1)), 1);
  Vec3 a = make_vec(2, 3, 5), b = make_vec(7, 11, 13);
  EXPECT_EQ(det3(a, a, b), 0);
  EXPECT_EQ(det3(a, b, b), 0);
}

TEST(Det3, CounterexampleValue) {
  Vec3 l1{1, Rational(13, 3), Rational(23, 3)};
  Vec3 l2{1, Rational(65, 12), Rational(20, 3)};
  EXPECT_EQ(det3(l1, l2, make_vec(1, 0, 0)), Rational(-455, 36));
  EXPECT_EQ(det3(make_vec(3, 13, 23), make_vec(12, 65, 80), make_vec(1, 0, 0)), -455);
}

TEST(Det3, AlternatingMultilinearAgainstLeibniz) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    Vec3 u = rng.vec(), v = rng.vec(), w = rng.vec(), x = rng.vec();
    Rational s = rng.nonzero_rational();
    EXPECT_EQ(det3(u, v, w), oracle::bracket(u, v, w));
    EXPECT_EQ(det3(v, u, w), -det3(u, v, w));
    EXPECT_EQ(det3(u, w, v), -det3(u, v, w));
    EXPECT_EQ(det3(s * u + x, v, w), s * det3(u, v, w) + det3(x, v, w));
  }
}

TEST(Matrix, DetMatchesLeibniz) {
  Rng rng(2);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      Matrix m = random_matrix(rng, n, n);
      EXPECT_EQ(det(m), oracle::leibniz_det(to_mat(m)));
    }
}

TEST(Matrix, RankMatchesNaive) {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = rng.uniform(1, 6), c = rng.uniform(1, 6);
    Matrix m = random_matrix(rng, r, c, 2);
    // force some dependent rows
    if (r >= 3) {
      Rational s = rng.nonzero_rational();
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * s + m(1, j);
    }
    EXPECT_EQ(rank(m), oracle::naive_rank(to_mat(m)));
  }
}

TEST(Matrix, ZeroMatrix) {
  Matrix z(3, 4);
  EXPECT_EQ(rank(z), 0u);
  EXPECT_EQ(kernel(z).size(), 4u);
}

TEST(Matrix, KernelIsKernel) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = rng.uniform(1, 5), c = rng.uniform(1, 7);
    Matrix m = random_matrix(rng, r, c, 2);
    auto k = kernel(m);
    EXPECT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k) {
      ASSERT_EQ(v.size(), c);
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Rank, CactusFixture) {
  EXPECT_EQ(cactus14_gamma().rank(), 3u);
}

TEST(Meet, CoordinatePlanes) {
  Vec3 e1 = make_vec(1, 0, 0), e2 = make_vec(0, 1, 0), e3 = make_vec(0, 0, 1);
  EXPECT_TRUE(proportional(meet_lines(e1, e2, e1, e3), e1));
  EXPECT_TRUE(is_zero(meet_lines(e1, e2, e1, e2)));
  EXPECT_TRUE(is_zero(meet_lines(e1, e2, e2, e1 + e2)));
}

TEST(Meet, DegenerateLine) {
  Vec3 a = make_vec(1, 2, 3);
  try {
    meet_lines(a, Rational(2) * a, make_vec(0, 1, 0), make_vec(0, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degenerate);
    EXPECT_STREQ(e.what(), "degenerate line");
  }
}

TEST(Meet, ShuffleFormulaAndOracle) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Vec3 a1 = rng.vec(), a2 = rng.vec(), b1 = rng.vec(), b2 = rng.vec();
    if (is_zero(cross(a1, a2)) || is_zero(cross(b1, b2))) continue;
    Vec3 m = meet_lines(a1, a2, b1, b2);
    EXPECT_EQ(m, det3(a1, a2, b1) * b2 - det3(a1, a2, b2) * b1);
    EXPECT_EQ(det3(a1, a2, m), 0);
    EXPECT_EQ(det3(b1, b2, m), 0);
    EXPECT_TRUE(proportional(m, oracle::intersection(a1, a2, b1, b2)));
  }
}

TEST(Vec, NormalizeFirst) {
  EXPECT_EQ(normalize_first(make_vec(0, 4, 6)), (Vec3{0, 1, Rational(3, 2)}));
  EXPECT_TRUE(is_zero(normalize_first(make_vec(0, 0, 0))));
  EXPECT_TRUE(proportional(make_vec(1, 2, 3), make_vec(-2, -4, -6)));
  EXPECT_FALSE(proportional(make_vec(1, 2, 3), make_vec(0, 0, 0)));
}
