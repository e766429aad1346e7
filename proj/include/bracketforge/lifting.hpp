#pragma once

// Liftability matrices, their minors, and liftings of planar collections.

#include "bracketforge/bracket_poly.hpp"
#include "bracketforge/config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bracketforge {

struct QScheme {
  enum class Kind { Symbolic, Concrete, PerColumn };
  Kind kind = Kind::Symbolic;
  Vec3 v{};
  std::vector<int> basis;  // PerColumn: 0,1,2 for e1,e2,e3, one per column in label order

  static QScheme symbolic() { return {}; }
  static QScheme concrete(const Vec3& v) { return {Kind::Concrete, v, {}}; }
  static QScheme per_column(std::vector<int> b) { return {Kind::PerColumn, {}, std::move(b)}; }
};

Vec3 basis_vector(int k);

// Nonzero entry sign * [a b q_col].
struct LiftEntry {
  Label a = 0, b = 0;
  int sign = 1;
};

class LiftMatrix {
 public:
  LiftMatrix() = default;
  LiftMatrix(std::vector<Triple> rows, std::vector<Label> cols, QScheme scheme);

  const std::vector<Triple>& rows() const { return rows_; }
  const std::vector<Label>& cols() const { return cols_; }
  const QScheme& scheme() const { return scheme_; }
  std::optional<LiftEntry> entry(std::size_t r, std::size_t c) const;
  // The entry as a polynomial under the matrix's own scheme.
  BracketPoly entry_poly(std::size_t r, std::size_t c) const;
  // Numeric matrix. Symbolic needs q; PerColumn uses the stored basis unless an assignment is given.
  Matrix evaluate(const Realization& g, const std::optional<Vec3>& q = std::nullopt) const;
  Matrix evaluate_per_column(const Realization& g, const std::vector<int>& assignment) const;

 private:
  Vec3 column_q(std::size_t c, const std::optional<Vec3>& q, const std::vector<int>* assignment) const;
  std::vector<Triple> rows_;
  std::vector<Label> cols_;
  QScheme scheme_;
};

// Rows are the sorted 3-circuits; row {c1<c2<c3} holds [c2c3q], -[c1c3q], [c1c2q].
LiftMatrix lift_matrix(const Config& cfg, const QScheme& scheme);

// Fully expanded determinant of the chosen submatrix (small sizes only).
BracketPoly symbolic_minor(const LiftMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
// Evaluate entries first, then an exact numeric determinant.
Rational lazy_minor_eval(const LiftMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                         const Realization& g, const std::optional<Vec3>& q = std::nullopt);

// One generator of a lifting family: a minor of a (possibly point-deleted) liftability matrix
// under a per-column basis assignment.
struct LiftDescriptor {
  std::string matrix_id;     // "M" or "M\\{i}"
  std::size_t part = 0;
  std::vector<std::size_t> rows, cols;  // positions in that matrix
  std::vector<int> q;        // one basis index per column of that matrix
};

// Streams descriptors by mixed-radix index: (part, position set, q assignment).
class LiftFamily {
 public:
  enum class Positions { AllRows, Principal };
  struct Part {
    std::string id;
    Config cfg;
    std::size_t size = 0;
    Positions positions = Positions::AllRows;
    bool symbolic_q = false;  // count position sets only
  };

  void add_part(Part p);
  const std::vector<Part>& parts() const { return parts_; }
  std::uint64_t count() const;
  std::uint64_t part_count(std::size_t i) const;
  LiftDescriptor at(std::uint64_t index) const;
  // The liftability matrix of a part with the symbolic scheme.
  LiftMatrix matrix(std::size_t part) const;
  // Value of the descriptor's minor at g (per-column q from the descriptor).
  Rational eval(const LiftDescriptor& d, const Realization& g) const;
  // Same positions with one common q for every column.
  Rational eval_common_q(const LiftDescriptor& d, const Realization& g, const Vec3& q) const;

 private:
  std::vector<Part> parts_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k);

// q avoids span(g_i, g_j) for independent pairs and every nonzero g_i.
bool q_in_general_position(const Realization& g, const Vec3& q);

// dim ker of the evaluated matrix. Checks g in V_C(cfg) and q in general position.
std::size_t lift_dim(const Config& cfg, const Realization& g, const Vec3& q);

struct LiftingResult {
  std::size_t kernel_dim = 0;
  std::size_t trivial_dim = 0;  // kernel vectors whose lifted collection has rank <= 2
  std::optional<Realization> lifted;
};

// Lifts a rank <= 2 collection off its plane along q; no lifting when the kernel is only trivial.
LiftingResult construct_lifting(const Config& cfg, const Realization& g, const Vec3& q);

// New vector for p on the plane spanned by plane_a, plane_b, given a lifting of the others.
// Degree 0: plane_a. Degree 1: projection from q of a point of the lifted line.
// Degree 2: projection from q of the intersection of the two lifted lines.
Vec3 extend_point_deg_le2(const Config& cfg, const Realization& lifted_rest, Label p, const Vec3& q,
                          const Vec3& plane_a, const Vec3& plane_b);

struct ExtensionHypothesis {
  bool holds = false;
  std::size_t dim = 0;     // dim(cfg minus p) from an admissible ordering
  std::size_t degree = 0;  // deg(p) in cfg
  long margin = 0;         // dim - (1 + degree)
};

// dim(cfg \ p) >= 1 + deg(p); cfg \ p must be nilpotent.
ExtensionHypothesis nilpotent_extension_hypothesis(const Config& cfg, Label p);

}  // namespace bracketforge
