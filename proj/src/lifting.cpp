#include "bracketforge/lifting.hpp"

#include "bracketforge/error.hpp"

#include <algorithm>

namespace bracketforge {

Vec3 basis_vector(int k) {
  Vec3 v = make_vec(0, 0, 0);
  if (k < 0 || k > 2) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

LiftMatrix::LiftMatrix(std::vector<Triple> rows, std::vector<Label> cols, QScheme scheme)
    : rows_(std::move(rows)), cols_(std::move(cols)), scheme_(std::move(scheme)) {
  if (scheme_.kind == QScheme::Kind::PerColumn) {
    if (scheme_.basis.size() != cols_.size())
      throw Error(ErrorCode::DimensionMismatch, "per-column scheme needs one basis index per column");
    for (int b : scheme_.basis)
      if (b < 0 || b > 2) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  }
}

std::optional<LiftEntry> LiftMatrix::entry(std::size_t r, std::size_t c) const {
  const Triple& t = rows_.at(r);
  Label col = cols_.at(c);
  if (col == t[0]) return LiftEntry{t[1], t[2], 1};
  if (col == t[1]) return LiftEntry{t[0], t[2], -1};
  if (col == t[2]) return LiftEntry{t[0], t[1], 1};
  return std::nullopt;
}

BracketPoly LiftMatrix::entry_poly(std::size_t r, std::size_t c) const {
  auto e = entry(r, c);
  if (!e) return {};
  ColumnSym qs = ColumnSym::symbolic_q();
  if (scheme_.kind == QScheme::Kind::Concrete) qs = ColumnSym::constant(scheme_.v);
  if (scheme_.kind == QScheme::Kind::PerColumn) qs = ColumnSym::constant(basis_vector(scheme_.basis[c]));
  return bracket(ColumnSym::point(e->a), ColumnSym::point(e->b), qs) * Rational(e->sign);
}

Vec3 LiftMatrix::column_q(std::size_t c, const std::optional<Vec3>& q, const std::vector<int>* assignment) const {
  if (assignment) return basis_vector((*assignment)[c]);
  switch (scheme_.kind) {
    case QScheme::Kind::Concrete: return scheme_.v;
    case QScheme::Kind::PerColumn: return basis_vector(scheme_.basis[c]);
    case QScheme::Kind::Symbolic: break;
  }
  if (!q) throw Error(ErrorCode::InvalidArgument, "unbound q");
  return *q;
}

Matrix LiftMatrix::evaluate(const Realization& g, const std::optional<Vec3>& q) const {
  Matrix m(rows_.size(), cols_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (auto e = entry(r, c)) m(r, c) = e->sign * det3(g[e->a], g[e->b], column_q(c, q, nullptr));
  return m;
}

Matrix LiftMatrix::evaluate_per_column(const Realization& g, const std::vector<int>& assignment) const {
  if (assignment.size() != cols_.size()) throw Error(ErrorCode::DimensionMismatch, "assignment size");
  Matrix m(rows_.size(), cols_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (auto e = entry(r, c)) m(r, c) = e->sign * det3(g[e->a], g[e->b], column_q(c, std::nullopt, &assignment));
  return m;
}

LiftMatrix lift_matrix(const Config& cfg, const QScheme& scheme) {
  return LiftMatrix(circuits3(cfg), cfg.ground(), scheme);
}

namespace {

void check_dims(const LiftMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::DimensionMismatch, "minor needs as many rows as columns");
  for (auto r : rows)
    if (r >= m.rows().size()) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
  for (auto c : cols)
    if (c >= m.cols().size()) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
}

}  // namespace

BracketPoly symbolic_minor(const LiftMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  check_dims(m, rows, cols);
  std::vector<std::vector<BracketPoly>> e(rows.size(), std::vector<BracketPoly>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) e[i][j] = m.entry_poly(rows[i], cols[j]);
  return poly_det(e);
}

Rational lazy_minor_eval(const LiftMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                         const Realization& g, const std::optional<Vec3>& q) {
  check_dims(m, rows, cols);
  return det(m.evaluate(g, q).submatrix(rows, cols));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t v = next; v < n; ++v) {
      std::uint64_t with = binomial(n - v - 1, k - slot - 1);
      if (rank < with) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= with;
    }
  }
  return out;
}

namespace {

std::uint64_t pow3(std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= 3;
  return r;
}

}  // namespace

void LiftFamily::add_part(Part p) { parts_.push_back(std::move(p)); }

std::uint64_t LiftFamily::part_count(std::size_t i) const {
  const Part& p = parts_.at(i);
  std::size_t rows = circuits3(p.cfg).size(), cols = p.cfg.d();
  std::uint64_t positions = 0;
  if (p.positions == Positions::Principal)
    positions = binomial(std::min(rows, cols), p.size);
  else
    positions = binomial(rows, p.size) * binomial(cols, p.size);
  return positions * (p.symbolic_q ? 1 : pow3(cols));
}

std::uint64_t LiftFamily::count() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) total += part_count(i);
  return total;
}

LiftMatrix LiftFamily::matrix(std::size_t part) const { return lift_matrix(parts_.at(part).cfg, QScheme::symbolic()); }

LiftDescriptor LiftFamily::at(std::uint64_t index) const {
  std::size_t pi = 0;
  while (pi < parts_.size() && index >= part_count(pi)) index -= part_count(pi++);
  if (pi == parts_.size()) throw Error(ErrorCode::InvalidArgument, "descriptor index out of range");
  const Part& p = parts_[pi];
  std::size_t rows = circuits3(p.cfg).size(), cols = p.cfg.d();
  std::uint64_t nq = p.symbolic_q ? 1 : pow3(cols);
  std::uint64_t pos = index / nq, qi = index % nq;
  LiftDescriptor d;
  d.matrix_id = p.id;
  d.part = pi;
  if (p.positions == Positions::Principal) {
    d.rows = unrank_combination(pos, std::min(rows, cols), p.size);
    d.cols = d.rows;
  } else {
    std::uint64_t ncols = binomial(cols, p.size);
    d.rows = unrank_combination(pos / ncols, rows, p.size);
    d.cols = unrank_combination(pos % ncols, cols, p.size);
  }
  if (!p.symbolic_q) {
    d.q.assign(cols, 0);
    for (std::size_t c = cols; c-- > 0;) {
      d.q[c] = static_cast<int>(qi % 3);
      qi /= 3;
    }
  }
  return d;
}

Rational LiftFamily::eval(const LiftDescriptor& d, const Realization& g) const {
  const Part& p = parts_.at(d.part);
  if (p.symbolic_q) throw Error(ErrorCode::InvalidArgument, "symbolic-q descriptor needs a q vector");
  LiftMatrix m = matrix(d.part);
  return det(m.evaluate_per_column(g.restricted(p.cfg.ground()), d.q).submatrix(d.rows, d.cols));
}

Rational LiftFamily::eval_common_q(const LiftDescriptor& d, const Realization& g, const Vec3& q) const {
  const Part& p = parts_.at(d.part);
  LiftMatrix m = matrix(d.part);
  return det(m.evaluate(g.restricted(p.cfg.ground()), q).submatrix(d.rows, d.cols));
}

bool q_in_general_position(const Realization& g, const Vec3& q) {
  if (is_zero(q)) return false;
  const auto& c = g.cols();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_zero(c[i]) && proportional(c[i], q)) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!is_zero(cross(c[i], c[j])) && det3(c[i], c[j], q) == 0) return false;
  }
  return true;
}

namespace {

void check_lift_inputs(const Config& cfg, const Realization& g, const Vec3& q) {
  auto m = in_circuit_variety(cfg, g);
  if (!m.member) throw Error(ErrorCode::InvalidArgument, "realization not in the circuit variety: " + m.witness);
  if (!q_in_general_position(g, q)) throw Error(ErrorCode::Degenerate, "degenerate q");
}

Realization lifted_by(const Realization& g, const std::vector<Rational>& z, const Vec3& q) {
  std::vector<Vec3> cols;
  for (std::size_t i = 0; i < g.size(); ++i) cols.push_back(g.cols()[i] + z[i] * q);
  return Realization(g.labels(), cols);
}

}  // namespace

std::size_t lift_dim(const Config& cfg, const Realization& g, const Vec3& q) {
  check_lift_inputs(cfg, g, q);
  Matrix m = lift_matrix(cfg, QScheme::concrete(q)).evaluate(g);
  return cfg.d() - rank(m);
}

LiftingResult construct_lifting(const Config& cfg, const Realization& g, const Vec3& q) {
  check_lift_inputs(cfg, g, q);
  if (g.rank() > 2) throw Error(ErrorCode::InvalidArgument, "construct_lifting needs a rank <= 2 collection");
  LiftingResult res;
  Matrix m = lift_matrix(cfg, QScheme::concrete(q)).evaluate(g);
  auto ker = kernel(m);
  res.kernel_dim = ker.size();

  // Trivial directions z_i = t . g_i; keep those that are kernel vectors and count them.
  std::vector<std::vector<Rational>> trivial;
  for (int k = 0; k < 3; ++k) {
    std::vector<Rational> z;
    for (const auto& c : g.cols()) z.push_back(c[static_cast<std::size_t>(k)]);
    trivial.push_back(z);
  }
  Matrix tm(3, g.size());
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < g.size(); ++i) tm(k, i) = trivial[k][i];
  res.trivial_dim = rank(tm);

  std::size_t best_rank = 0, best = 0;
  for (std::size_t i = 0; i < ker.size(); ++i) {
    std::size_t r = lifted_by(g, ker[i], q).rank();
    if (r > best_rank) {
      best_rank = r;
      best = i;
    }
  }
  if (best_rank < 3) return res;
  Realization lifted = lifted_by(g, ker[best], q);
  if (!in_circuit_variety(cfg, lifted).member) throw Error(ErrorCode::Internal, "lifted collection left the circuit variety");
  res.lifted = lifted;
  return res;
}

Vec3 extend_point_deg_le2(const Config& cfg, const Realization& lifted_rest, Label p, const Vec3& q, const Vec3& plane_a,
                          const Vec3& plane_b) {
  std::size_t deg = degree(cfg, p);
  if (deg >= 3) throw Error(ErrorCode::Hypothesis, "non-constructive case; see the nilpotent-add-point hypothesis check");
  Vec3 n = cross(plane_a, plane_b);
  if (is_zero(n)) throw Error(ErrorCode::Degenerate, "degenerate line");
  if (dot(n, q) == 0) throw Error(ErrorCode::Degenerate, "degenerate q");
  auto project = [&](const Vec3& x) { return x - (dot(n, x) / dot(n, q)) * q; };
  if (deg == 0) return plane_a;

  // Two independent lifted points on each line through p.
  auto span_of = [&](const Line& l) {
    std::vector<Vec3> pts;
    for (Label x : l)
      if (x != p && lifted_rest.has(x) && !is_zero(lifted_rest[x])) pts.push_back(lifted_rest[x]);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (!is_zero(cross(pts[i], pts[j]))) return std::pair{pts[i], pts[j]};
    throw Error(ErrorCode::Degenerate, "lifted line through the new point is degenerate");
  };
  auto through = cfg.lines_through(p);
  auto [a1, a2] = span_of(cfg.lines()[through[0]]);
  if (deg == 1) return project(a1 + a2);
  auto [b1, b2] = span_of(cfg.lines()[through[1]]);
  return project(meet_lines(a1, a2, b1, b2));
}

ExtensionHypothesis nilpotent_extension_hypothesis(const Config& cfg, Label p) {
  Config rest = delete_points(cfg, {p});
  auto ord = admissible_ordering(rest);
  if (!ord) throw Error(ErrorCode::Hypothesis, "configuration minus the point is not nilpotent");
  ExtensionHypothesis h;
  h.dim = ord->dim();
  h.degree = degree(cfg, p);
  h.margin = static_cast<long>(h.dim) - static_cast<long>(1 + h.degree);
  h.holds = h.margin >= 0;
  return h;
}

}  // namespace bracketforge
