#pragma once

// Test-side generators and independent oracles. Oracles avoid the library
// routine they check: intersections come from a stacked kernel, wall degrees
// from the tensor filtration of a common adapted basis, and so on.

#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "tvb/chern.hpp"
#include "tvb/classical.hpp"
#include "tvb/cocycle.hpp"
#include "tvb/fixtures.hpp"
#include "tvb/generators.hpp"
#include "tvb/positivity.hpp"

namespace support {

using namespace tvb;

inline QVector qvec(std::initializer_list<Rational> xs) {
  QVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline IntVector ivec(std::initializer_list<std::int64_t> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

inline QVector random_vector(Index n, Rng& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  QVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

inline QVector random_nonzero_vector(Index n, Rng& rng, int range = 3) {
  for (;;) {
    QVector v = random_vector(n, rng, range);
    if (!v.isZero()) return v;
  }
}

inline Subspace random_subspace(Index n, Rng& rng) {
  std::uniform_int_distribution<Index> count(0, n);
  std::vector<QVector> vs;
  for (Index k = count(rng); k > 0; --k) vs.push_back(random_vector(n, rng));
  return Subspace::span(vs, n);
}

inline Prevaluation random_prevaluation(Index r, Rng& rng, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  const Frame frame = random_frame(r, rng);
  std::vector<Rational> values;
  for (Index i = 0; i < r; ++i) values.emplace_back(value(rng), den(rng));
  return Prevaluation::from_frame(frame, values);
}

/// Intersection as { A^T a : A^T a = B^T b }, from the kernel of [A^T | -B^T].
inline Subspace oracle_intersection(const Subspace& a, const Subspace& b) {
  const Index n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  QMatrix stacked(n, a.dim() + b.dim());
  stacked << a.basis().transpose(), -b.basis().transpose();
  const QMatrix k = kernel_basis(stacked);
  std::vector<QVector> out;
  for (Index c = 0; c < k.cols(); ++c) out.push_back(a.basis().transpose() * k.col(c).head(a.dim()));
  return Subspace::span(out, n);
}

inline bool same_prevaluations(const PLMap& a, const PLMap& b, int points, Rng& rng) {
  for (int k = 0; k < points; ++k) {
    const QVector x = random_lattice_point(a.fan().rank(), rng);
    if (!(evaluate(a, x) == evaluate(b, x))) return false;
  }
  return true;
}

/// Wall degrees from a common adapted basis of the two block filtrations:
/// the number of basis vectors with f + g >= d equals
/// dim sum_{f+g>=d} (F_f cap G_g). Blocks come from evaluating Phi at a point
/// of the wall's relative interior.
inline std::vector<Rational> oracle_wall_degrees(const PLMap& phi, const Wall& wall) {
  const Fan& fan = phi.fan();
  const Index r = phi.rank();
  const ConePiece& p = phi.piece(wall.sigma);
  const ConePiece& q = phi.piece(wall.sigma_prime);
  const QVector w = to_rational(wall.normal);
  Index nz = 0;
  while (w(nz) == 0) ++nz;

  // Generic point: 1, 1/7, 1/49, ... on the rays of tau.
  QVector x0 = QVector::Zero(fan.rank());
  Rational c = 1;
  for (std::size_t k : wall.tau) {
    x0 += c * fan.ray_q(k);
    c /= 7;
  }
  const Prevaluation at_x0 = evaluate_on_cone(phi, wall.sigma, x0);

  std::vector<Rational> degrees;
  for (std::size_t level = 0; level < at_x0.labels().size(); ++level) {
    const Rational value = at_x0.labels()[level];
    const Subspace higher = level == 0 ? Subspace::zero(r) : at_x0.flag()[level - 1];
    std::vector<std::pair<QVector, Rational>> f, g;
    QVector base;
    for (Index i = 0; i < r; ++i) {
      const QVector& u = p.weights[static_cast<std::size_t>(i)];
      if (x0.dot(u) != value) continue;
      if (base.size() == 0) base = u;
      f.emplace_back(higher.reduce(p.frame.line(i)), (u - base)(nz) / w(nz));
    }
    for (Index j = 0; j < r; ++j) {
      const QVector& u = q.weights[static_cast<std::size_t>(j)];
      if (x0.dot(u) != value) continue;
      g.emplace_back(higher.reduce(q.frame.line(j)), -(u - base)(nz) / w(nz));
    }
    auto filt = [&](const std::vector<std::pair<QVector, Rational>>& lines, const Rational& t) {
      std::vector<QVector> vs;
      for (const auto& [v, s] : lines)
        if (s >= t) vs.push_back(v);
      return Subspace::span(vs, r);
    };
    std::vector<Rational> sums;
    for (const auto& a : f)
      for (const auto& b : g) sums.push_back(a.second + b.second);
    std::sort(sums.begin(), sums.end(), std::greater<>());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    Index counted = 0;
    for (const auto& d : sums) {
      Subspace h = Subspace::zero(r);
      for (const auto& a : f)
        for (const auto& b : g)
          if (a.second + b.second >= d) h = sum(h, oracle_intersection(filt(f, a.second), filt(g, b.second)));
      for (; counted < h.dim(); ++counted) degrees.push_back(d);
    }
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

/// Candidate frame lines for rank <= 3: generic lines of E, the flag lines of
/// every ray, pairwise intersections of flag planes and generic lines inside
/// each flag plane. Every subspace cut out by the filtrations has a generic
/// member here.
inline std::vector<QVector> oracle_line_pool(const std::vector<Prevaluation>& at_rays, Index r) {
  std::vector<QVector> pool;
  for (const Rational p : {Rational(101), Rational(103), Rational(107)}) {
    QVector g(r);
    Rational power = 1;
    for (Index i = 0; i < r; ++i, power *= p) g(i) = power;
    pool.push_back(g);
  }
  for (Index i = 0; i < r; ++i) pool.push_back(QVector::Unit(r, i));
  std::vector<Subspace> planes;
  for (const auto& v : at_rays)
    for (const auto& f : v.flag()) {
      if (f.dim() == 1) pool.push_back(f.basis_vectors().front());
      if (f.dim() == 2 && f.dim() < r) {
        const auto b = f.basis_vectors();
        pool.push_back(b[0] + Rational(101) * b[1]);
        pool.push_back(b[0] + Rational(103) * b[1]);
        planes.push_back(f);
      }
    }
  for (std::size_t a = 0; a < planes.size(); ++a)
    for (std::size_t b = a + 1; b < planes.size(); ++b) {
      const Subspace m = oracle_intersection(planes[a], planes[b]);
      if (m.dim() == 1) pool.push_back(m.basis_vectors().front());
    }
  return pool;
}

/// Global generation by brute force for rank <= 3: every cone needs a frame
/// from the pool, with weights read off the ray values, that reproduces the
/// ray prevaluations of the cone and keeps each weight inside its line's
/// character polytope.
inline bool oracle_globally_generated(const PLMap& phi) {
  const Fan& fan = phi.fan();
  const Index r = phi.rank();
  std::vector<Prevaluation> at_rays;
  for (std::size_t k = 0; k < fan.num_rays(); ++k) at_rays.push_back(evaluate(phi, fan.ray_q(k)));
  const auto pool = oracle_line_pool(at_rays, r);
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const QMatrix g = fan.cone_generators(c);
    bool found = false;
    std::vector<std::size_t> pick(static_cast<std::size_t>(r));
    std::function<void(std::size_t, std::size_t)> search = [&](std::size_t depth, std::size_t from) {
      if (found) return;
      if (depth < pick.size()) {
        for (std::size_t k = from; k < pool.size(); ++k) {
          pick[depth] = k;
          search(depth + 1, k + 1);
        }
        return;
      }
      QMatrix m(r, r);
      for (Index i = 0; i < r; ++i) m.col(i) = pool[pick[static_cast<std::size_t>(i)]];
      if (rank(m) < r) return;
      std::vector<QVector> lines, weights;
      for (std::size_t k : pick) {
        QVector values(static_cast<Index>(fan.cone(c).size()));
        for (std::size_t j = 0; j < fan.cone(c).size(); ++j)
          values(static_cast<Index>(j)) = *at_rays[fan.cone(c)[j]](pool[k]);
        lines.push_back(pool[k]);
        weights.push_back(*solve(g, values));
      }
      const Frame frame(lines);
      for (std::size_t rho : fan.cone(c)) {
        std::vector<Rational> values;
        for (const auto& u : weights) values.push_back(fan.ray_q(rho).dot(u));
        if (!(Prevaluation::from_frame(frame, values) == at_rays[rho])) return;
      }
      for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t rho = 0; rho < fan.num_rays(); ++rho)
          if (fan.ray_q(rho).dot(weights[i]) > *at_rays[rho](lines[i])) return;
      found = true;
    };
    search(0, 0);
    if (!found) return false;
  }
  return true;
}

/// Random element of the isometry group of the standard form applied to the
/// standard normal frame: block-diagonal (A, A^{-T}) and unipotent shears.
inline NormalFrame random_normal_frame(Index r, FormKind kind, Rng& rng) {
  const Index n = 2 * r;
  QMatrix g = QMatrix::Identity(n, n);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int round = 0; round < 3; ++round) {
    const QMatrix a = random_frame(r, rng, 2).matrix();
    QMatrix block = QMatrix::Zero(n, n);
    block.topLeftCorner(r, r) = a;
    block.bottomRightCorner(r, r) = inverse(a).transpose();
    QMatrix s = QMatrix::Zero(r, r);
    for (Index i = 0; i < r; ++i)
      for (Index j = i; j < r; ++j) {
        if (kind == FormKind::symmetric && i == j) continue;
        s(i, j) = d(rng);
        s(j, i) = kind == FormKind::skew ? s(i, j) : Rational(-s(i, j));
      }
    QMatrix lower = QMatrix::Identity(n, n);
    lower.bottomLeftCorner(r, r) = s;
    QMatrix upper = QMatrix::Identity(n, n);
    upper.topRightCorner(r, r) = s;
    g = g * block * lower * upper;
  }
  NormalFrame out;
  for (Index i = 0; i < r; ++i) {
    out.e.push_back(g.col(i));
    out.f.push_back(g.col(r + i));
  }
  return out;
}

/// Rank 2 on the single cone spanned by e1, e2, e3 in Q^3; ray i jumps to
/// the line l_i at level 1, with l_1, l_2, l_3 pairwise distinct.
struct ThreeLines {
  Fan fan;
  RayFiltrationData data;
  std::vector<QVector> lines;
};

inline ThreeLines three_lines_instance() {
  Fan fan(3, {IntVector::Unit(3, 0), IntVector::Unit(3, 1), IntVector::Unit(3, 2)}, {{0, 1, 2}});
  std::vector<QVector> lines{QVector::Unit(2, 0), QVector::Unit(2, 1), QVector::Ones(2)};
  RayFiltrationData data{2, {}};
  for (const auto& l : lines)
    data.rays.emplace_back(2, std::vector<FiltrationJump>{{0, Subspace::full(2)}, {1, Subspace::span({l}, 2)}});
  return {std::move(fan), std::move(data), std::move(lines)};
}

/// Every frame of two distinct lines drawn from the l_i and the standard
/// basis, tested for adaptedness to all three ray filtrations.
inline bool three_lines_has_adapted_frame(const ThreeLines& inst) {
  std::vector<QVector> pool = inst.lines;
  pool.push_back(QVector::Unit(2, 0));
  pool.push_back(QVector::Unit(2, 1));
  pool.push_back(qvec({1, -1}));
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = 0; b < pool.size(); ++b) {
      if (a == b || rank(QMatrix((QMatrix(2, 2) << pool[a], pool[b]).finished())) < 2) continue;
      const Frame frame({pool[a], pool[b]});
      bool all = true;
      for (const auto& f : inst.data.rays) all = all && is_adapted(frame, f.prevaluation());
      if (all) return true;
    }
  return false;
}

}  // namespace support
