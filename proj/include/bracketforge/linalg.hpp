#pragma once

// Exact rational scalars, 3-vectors and dense matrices.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace bracketforge {

using Rational = mpq_class;
using Vec3 = std::array<Rational, 3>;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

Vec3 make_vec(long a, long b, long c);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Rational& s, const Vec3& v);
Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

Rational det3(const Vec3& u, const Vec3& v, const Vec3& w);

// Same projective point: both nonzero and parallel, or both zero.
bool proportional(const Vec3& a, const Vec3& b);
// Scale so the first nonzero coordinate is 1 (zero stays zero).
Vec3 normalize_first(const Vec3& v);

// [a1 a2 b1] b2 - [a1 a2 b2] b1, the intersection of span{a1,a2} and span{b1,b2}.
// Throws Degenerate if either pair is dependent.
Vec3 meet_lines(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  static Matrix from_columns(const std::vector<Vec3>& cols);
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool operator==(const Matrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Fraction-free elimination: rows are cleared to integers, then Bareiss.
std::size_t rank(const Matrix& m);
Rational det(const Matrix& m);
// Basis of {v : m v = 0}; rank(m) + kernel(m).size() == m.cols().
std::vector<std::vector<Rational>> kernel(const Matrix& m);
std::size_t rank_of(const std::vector<Vec3>& vs);

}  // namespace bracketforge
