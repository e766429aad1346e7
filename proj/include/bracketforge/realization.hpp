#pragma once

#include "bracketforge/config.hpp"
#include "bracketforge/linalg.hpp"

#include <string>
#include <vector>

namespace bracketforge {

// A 3 x d collection of exact vectors, one per label, kept in label order.
class Realization {
 public:
  Realization() = default;
  Realization(std::vector<Label> labels, std::vector<Vec3> cols);
  static Realization zeros(const std::vector<Label>& labels);

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<Vec3>& cols() const { return cols_; }
  std::size_t size() const { return cols_.size(); }
  bool has(Label l) const;
  const Vec3& operator[](Label l) const;
  Vec3& operator[](Label l);
  Matrix matrix() const { return Matrix::from_columns(cols_); }
  std::size_t rank() const { return rank_of(cols_); }
  Realization restricted(const std::vector<Label>& keep) const;
  bool operator==(const Realization&) const = default;

 private:
  std::vector<Label> labels_;
  std::vector<Vec3> cols_;
};

struct MembershipResult {
  bool member = true;
  std::string witness;  // first violated dependency, e.g. "circuit {1,6,8}"
};

// Every 3-circuit determinant vanishes, loops are zero, parallel classes are dependent.
MembershipResult in_circuit_variety(const Config& cfg, const Realization& g);

// Gamma_M membership: in V_C, every basis triple independent, rank 3.
MembershipResult in_realization_space(const Config& cfg, const Realization& g);

}  // namespace bracketforge
