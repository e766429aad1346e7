#include "bracketforge/realization.hpp"

#include "bracketforge/error.hpp"

#include <algorithm>
#include <numeric>

namespace bracketforge {

Realization::Realization(std::vector<Label> labels, std::vector<Vec3> cols) {
  if (labels.size() != cols.size()) throw Error(ErrorCode::DimensionMismatch, "labels and columns differ in count");
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  for (auto i : order) {
    if (!labels_.empty() && labels_.back() == labels[i])
      throw Error(ErrorCode::InvalidArgument, "duplicate label " + std::to_string(labels[i]));
    labels_.push_back(labels[i]);
    cols_.push_back(cols[i]);
  }
}

Realization Realization::zeros(const std::vector<Label>& labels) {
  return Realization(labels, std::vector<Vec3>(labels.size(), make_vec(0, 0, 0)));
}

bool Realization::has(Label l) const { return std::binary_search(labels_.begin(), labels_.end(), l); }

const Vec3& Realization::operator[](Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) throw Error(ErrorCode::InvalidArgument, "no column for point " + std::to_string(l));
  return cols_[static_cast<std::size_t>(it - labels_.begin())];
}

Vec3& Realization::operator[](Label l) {
  return const_cast<Vec3&>(static_cast<const Realization&>(*this)[l]);
}

Realization Realization::restricted(const std::vector<Label>& keep) const {
  std::vector<Label> ls;
  std::vector<Vec3> cs;
  for (Label l : keep) {
    ls.push_back(l);
    cs.push_back((*this)[l]);
  }
  return Realization(ls, cs);
}

namespace {

std::string set_string(const std::vector<Label>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

MembershipResult in_circuit_variety(const Config& cfg, const Realization& g) {
  if (g.labels() != cfg.ground()) throw Error(ErrorCode::DimensionMismatch, "realization labels do not match the ground set");
  for (Label l : cfg.loops())
    if (!is_zero(g[l])) return {false, "loop " + std::to_string(l)};
  for (const auto& c : cfg.parallel_classes())
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!is_zero(cross(g[c[i]], g[c[j]]))) return {false, "parallel " + set_string({c[i], c[j]})};
  for (const auto& l : cfg.lines())
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j)
        for (std::size_t k = j + 1; k < l.size(); ++k)
          if (det3(g[l[i]], g[l[j]], g[l[k]]) != 0) return {false, "circuit " + set_string({l[i], l[j], l[k]})};
  return {};
}

MembershipResult in_realization_space(const Config& cfg, const Realization& g) {
  auto r = in_circuit_variety(cfg, g);
  if (!r.member) return r;
  if (!cfg.is_simple()) throw Error(ErrorCode::NotSimple, "requires simple configuration");
  // Rank 2 when one line carries every point.
  std::size_t want = std::min<std::size_t>(cfg.d(), 3);
  for (const auto& l : cfg.lines())
    if (l.size() == cfg.d()) want = 2;
  if (g.rank() != want) return {false, "rank " + std::to_string(g.rank())};
  if (want == 2) {
    const auto& gr = cfg.ground();
    for (std::size_t i = 0; i < gr.size(); ++i)
      for (std::size_t j = i + 1; j < gr.size(); ++j)
        if (is_zero(cross(g[gr[i]], g[gr[j]]))) return {false, "basis " + set_string({gr[i], gr[j]})};
    return {};
  }
  for (const auto& t : bases3(cfg))
    if (det3(g[t[0]], g[t[1]], g[t[2]]) == 0) return {false, "basis " + set_string({t[0], t[1], t[2]})};
  return {};
}

}  // namespace bracketforge
