#include "bracketforge/fixtures.hpp"

#include "bracketforge/error.hpp"
#include "bracketforge/lifting.hpp"

#include <algorithm>

namespace bracketforge {

long Rng::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(eng_() % span);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

Rational Rng::nonzero_rational(long range) {
  long n = 0;
  while (n == 0) n = uniform(-range, range);
  Rational r(n, uniform(1, range));
  r.canonicalize();
  return r;
}

Vec3 Rng::vec(long range) {
  return make_vec(uniform(-range, range), uniform(-range, range), uniform(-range, range));
}

Realization generic_collinear(const std::vector<Label>& labels, Rng& rng, long range) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Vec3 u = rng.vec(range), v = rng.vec(range);
    if (is_zero(cross(u, v))) continue;
    std::vector<Vec3> cols;
    bool ok = true;
    for (std::size_t i = 0; i < labels.size() && ok; ++i) {
      Vec3 p = Rational(rng.uniform(-range, range)) * u + Rational(rng.uniform(-range, range)) * v;
      if (is_zero(p)) ok = false;
      for (const auto& c : cols)
        if (proportional(c, p)) ok = false;
      cols.push_back(p);
    }
    if (ok) return Realization(labels, cols);
  }
  throw Error(ErrorCode::Degenerate, "could not sample collinear points");
}

Vec3 generic_q(const Realization& g, Rng& rng, long range) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Vec3 q = rng.vec(range);
    if (q_in_general_position(g, q)) return q;
  }
  throw Error(ErrorCode::Degenerate, "could not sample q in general position");
}

Realization pascal_family(const Rational& x, const Rational& y, const Rational& eta, const Rational& eps,
                          const Rational& z) {
  const Rational one(1);
  std::vector<Vec3> cols = {
      {one, 0, 0},
      {one, eps, 0},
      {one, 0, eta},
      {one, eps, eta},
      {one + x, eps, 0},
      {one + y, eps, eta},
      {one + y + z, eps + eps * z, eta},
      {-(one + z) * (x + 1) + one + y + z, 0, eta},
      {2 * x + 1, (one + x) * eps, eta * x},
  };
  // column j of the parametrization is the Pascal point below
  Realization g({7, 8, 1, 2, 9, 4, 3, 5, 6}, cols);
  auto m = in_realization_space(preset("pascal"), g);
  if (!m.member) throw Error(ErrorCode::Degenerate, "pascal parameters not generic: " + m.witness);
  return g;
}

Realization pascal_sample(Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    try {
      return pascal_family(rng.nonzero_rational(), rng.nonzero_rational(), rng.nonzero_rational(),
                           rng.nonzero_rational(), rng.nonzero_rational());
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::Degenerate, "could not sample a pascal realization");
}

Realization pappus_realization(std::uint64_t seed) {
  Rng rng(seed);
  const Config cfg = preset("pappus");
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    auto a = generic_collinear({1, 2, 3}, rng);
    auto b = generic_collinear({4, 5, 6}, rng);
    std::vector<Vec3> cols = {a[1], a[2], a[3], b[4], b[5], b[6]};
    try {
      cols.push_back(meet_lines(a[1], b[5], a[2], b[4]));
      cols.push_back(meet_lines(a[1], b[6], a[3], b[4]));
      cols.push_back(meet_lines(a[2], b[6], a[3], b[5]));
    } catch (const Error&) {
      continue;
    }
    Realization g({1, 2, 3, 4, 5, 6, 7, 8, 9}, cols);
    if (in_realization_space(cfg, g).member) return g;
  }
  throw Error(ErrorCode::Degenerate, "could not sample a pappus realization");
}

Config pappus8_config() {
  return Config({2, 3, 4, 5, 6, 7, 8, 9}, {{2, 4, 7}, {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {7, 8, 9}});
}

namespace {
const std::vector<Label> kPappus8Order = {9, 4, 5, 6, 2, 3, 7, 8};
}

Realization pappus8_family(const Rational& v, const Rational& z, const Rational& w) {
  const Rational one(1);
  std::vector<Vec3> cols = {
      {one, 0, 0}, {0, one, 0}, {0, 0, one}, {one, one, one},
      {one + v, one, one}, {one, 0, w}, {one + v, one + z, one}, {one, w + z * w, w},
  };
  return Realization(kPappus8Order, cols);
}

Realization pappus8_xi(const Rational& x, const Rational& y) {
  const Rational one(1);
  std::vector<Vec3> cols = {
      {one, 0, 0}, {0, one, 0}, {0, 0, one}, {one, one, one},
      {one, 0, 0}, {one, 0, 0}, {one, x, 0}, {one, y, 0},
  };
  return Realization(kPappus8Order, cols);
}

Realization pappus8_epsilon(const Rational& eps, const Rational& x, const Rational& y) {
  Rational v = 1 / eps - 1;
  Rational w = eps * y / x;
  Rational z = x / eps - 1;
  return pappus8_family(v, z, w);
}

Realization nilpotent_realization(const Config& cfg, Rng& rng) {
  if (!cfg.is_simple()) throw Error(ErrorCode::NotSimple, "requires simple configuration");
  auto ord = admissible_ordering(cfg);
  if (!ord) throw Error(ErrorCode::Hypothesis, "configuration is not nilpotent");
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Realization g = Realization::zeros(cfg.ground());
    std::vector<Label> placed;
    for (std::size_t i = 0; i < ord->perm.size(); ++i) {
      Label p = ord->perm[i];
      if (ord->weights[i] == 0) {
        g[p] = rng.vec();
      } else {
        // the one line of the prefix through p
        std::vector<Label> prefix = placed;
        prefix.push_back(p);
        Config r = restrict_to(cfg, prefix);
        std::vector<Label> mates;
        for (Label q : r.lines()[r.lines_through(p).front()])
          if (q != p) mates.push_back(q);
        if (mates.size() < 2) throw Error(ErrorCode::Internal, "ordering weight without a spanning line");
        g[p] = Rational(rng.nonzero_rational(kDefaultRange)) * g[mates[0]] +
               Rational(rng.nonzero_rational(kDefaultRange)) * g[mates[1]];
      }
      placed.push_back(p);
    }
    if (in_realization_space(cfg, g).member) return g;
  }
  throw Error(ErrorCode::Degenerate, "could not sample a realization");
}

Realization cactus_realization(const Config& cfg, std::uint64_t seed) {
  auto rep = cactus_check(cfg);
  if (!rep.cactus) throw Error(ErrorCode::Hypothesis, "not a cactus configuration: " + rep.reason);
  Rng rng(seed);
  return nilpotent_realization(cfg, rng);
}

Realization cactus14_gamma() {
  std::vector<Label> labels = {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 1, 2, 3};
  std::vector<Vec3> cols = {
      make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1),  make_vec(1, 1, 1),  make_vec(1, 2, 3),
      make_vec(1, 4, 8), make_vec(1, 5, 7), make_vec(1, 6, 10), make_vec(1, 7, 12), make_vec(1, 9, 21),
      make_vec(1, 8, 17), make_vec(0, 0, 0), make_vec(0, 0, 0), make_vec(0, 0, 0),
  };
  return Realization(labels, cols);
}

Realization qs_realization(Rng& rng) {
  const Config cfg = preset("qs");
  // four random lines; each point is where its two lines cross
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    std::vector<Vec3> L;
    for (int i = 0; i < 4; ++i) L.push_back(rng.vec());
    std::vector<Vec3> cols(6);
    for (int p = 1; p <= 6; ++p) {
      auto th = cfg.lines_through(p);
      if (th.size() != 2) throw Error(ErrorCode::Internal, "qs point off two lines");
      cols[p - 1] = cross(L[th[0]], L[th[1]]);
    }
    Realization g({1, 2, 3, 4, 5, 6}, cols);
    if (in_realization_space(cfg, g).member) return g;
  }
  throw Error(ErrorCode::Degenerate, "could not sample a qs realization");
}

Realization qs_projected(Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Realization g = qs_realization(rng);
    Vec3 c = rng.vec(), n = rng.vec();
    if (dot(n, c) == 0) continue;
    std::vector<Vec3> cols;
    bool ok = true;
    for (const auto& x : g.cols()) {
      Vec3 y = x - (dot(n, x) / dot(n, c)) * c;
      if (is_zero(y)) ok = false;
      cols.push_back(y);
    }
    if (ok) return Realization(g.labels(), cols);
  }
  throw Error(ErrorCode::Degenerate, "could not project");
}

Config random_glue_tree(Rng& rng) {
  auto piece = [&] {
    if (rng.uniform(0, 1) == 0) return preset("line:" + std::to_string(rng.uniform(3, 4)));
    return preset("cycle:" + std::to_string(rng.uniform(3, 4)) + ":3");
  };
  Config cur = piece();
  long extra = rng.uniform(0, 3);
  for (long i = 0; i < extra; ++i) {
    Config b = piece();
    Label p = cur.ground()[rng.below(cur.d())];
    Label q = b.ground()[rng.below(b.d())];
    cur = free_glue(cur, b, p, q);
  }
  return cur;
}

}  // namespace bracketforge
