#include "bracketforge/linalg.hpp"

#include "bracketforge/error.hpp"

#include <utility>

namespace bracketforge {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Vec3 make_vec(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Rational det3(const Vec3& u, const Vec3& v, const Vec3& w) { return dot(u, cross(v, w)); }

bool proportional(const Vec3& a, const Vec3& b) {
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  return is_zero(cross(a, b));
}

Vec3 normalize_first(const Vec3& v) {
  for (const auto& x : v)
    if (x != 0) {
      Rational inv = 1 / x;
      return inv * v;
    }
  return v;
}

Vec3 meet_lines(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
  if (is_zero(cross(a1, a2)) || is_zero(cross(b1, b2)))
    throw Error(ErrorCode::Degenerate, "degenerate line");
  return det3(a1, a2, b1) * b2 - det3(a1, a2, b2) * b1;
}

Matrix Matrix::from_columns(const std::vector<Vec3>& cols) {
  Matrix m(3, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < 3; ++r) m(r, c) = cols[c][r];
  return m;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

struct IntMatrix {
  std::size_t rows, cols;
  std::vector<mpz_class> a;
  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

// Each row multiplied by the lcm of its denominators; scale accumulates the product.
IntMatrix clear_denominators(const Matrix& m, Rational* scale) {
  IntMatrix im{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols())};
  Rational s = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) im.at(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    s *= l;
  }
  if (scale) *scale = s;
  return im;
}

// Bareiss elimination in place; returns rank, flips *sign on row swaps.
// With full rank on a square matrix the last pivot is the determinant.
std::size_t bareiss(IntMatrix& im, int* sign, mpz_class* last_pivot) {
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < im.cols && rank < im.rows; ++col) {
    std::size_t piv = rank;
    while (piv < im.rows && im.at(piv, col) == 0) ++piv;
    if (piv == im.rows) continue;
    if (piv != rank) {
      for (std::size_t c = 0; c < im.cols; ++c) std::swap(im.at(piv, c), im.at(rank, c));
      if (sign) *sign = -*sign;
    }
    for (std::size_t r = rank + 1; r < im.rows; ++r) {
      for (std::size_t c = col + 1; c < im.cols; ++c) {
        im.at(r, c) = im.at(rank, col) * im.at(r, c) - im.at(r, col) * im.at(rank, c);
        mpz_divexact(im.at(r, c).get_mpz_t(), im.at(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      im.at(r, col) = 0;
    }
    prev = im.at(rank, col);
    ++rank;
  }
  if (last_pivot) *last_pivot = prev;
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix im = clear_denominators(m, nullptr);
  return bareiss(im, nullptr, nullptr);
}

Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
  if (m.rows() == 0) return 1;
  Rational scale;
  IntMatrix im = clear_denominators(m, &scale);
  int sign = 1;
  mpz_class piv;
  // Bareiss only keeps the exact-division invariant when pivots sit on the diagonal,
  // which the column scan guarantees once rank is full.
  if (bareiss(im, &sign, &piv) < m.rows()) return 0;
  Rational d(piv);
  d /= scale;
  return sign < 0 ? Rational(-d) : d;
}

std::vector<std::vector<Rational>> kernel(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  Matrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && a(piv, col) == 0) ++piv;
    if (piv == R) continue;
    for (std::size_t c = 0; c < C; ++c) std::swap(a(piv, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = 0; c < C; ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < C; ++c) a(r, c) -= f * a(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<Vec3>& vs) { return rank(Matrix::from_columns(vs)); }

}  // namespace bracketforge
