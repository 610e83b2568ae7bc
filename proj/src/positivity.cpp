#include "tvb/positivity.hpp"

#include <algorithm>
#include <map>

namespace tvb {

namespace {

using Restriction = std::vector<Rational>;

Restriction restriction(const Fan& fan, const RayIndices& tau, const QVector& u) {
  Restriction out;
  for (std::size_t r : tau) out.push_back(fan.ray_q(r).dot(u));
  return out;
}

// Point of relint(tau) on which distinct restriction classes take distinct values.
QVector separating_point(const Fan& fan, const RayIndices& tau, const std::vector<Restriction>& classes) {
  for (int t = 2;; ++t) {
    std::vector<Rational> coeffs;
    Rational power = 1;
    for (std::size_t k = 0; k < tau.size(); ++k) coeffs.push_back(power *= t);
    std::vector<Rational> values;
    for (const auto& c : classes) {
      Rational v = 0;
      for (std::size_t k = 0; k < c.size(); ++k) v += coeffs[k] * c[k];
      values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) continue;
    QVector x = QVector::Zero(fan.rank());
    for (std::size_t k = 0; k < tau.size(); ++k) x += coeffs[k] * fan.ray_q(tau[k]);
    return x;
  }
}

// s with d = s * w; d is known to vanish on tau.
Rational transverse(const QVector& d, const QVector& w) {
  Index k = 0;
  while (w(k) == 0) ++k;
  const Rational s = d(k) / w(k);
  if (d != s * w) throw MalformedMapError("wall splitting: weight difference is not normal to the wall");
  return s;
}

// Bigraded multiplicities of two decreasing filtrations of a block.
void split_block(const std::vector<QVector>& f_lines, const std::vector<Rational>& f_levels,
                 const std::vector<QVector>& g_lines, const std::vector<Rational>& g_levels, Index ambient,
                 std::vector<Rational>& degrees) {
  auto distinct = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto fs = distinct(f_levels);
  const auto gs = distinct(g_levels);
  auto piece = [&](const std::vector<QVector>& lines, const std::vector<Rational>& levels,
                   const std::vector<Rational>& cands, std::size_t k) {
    std::vector<QVector> chosen;
    if (k < cands.size())
      for (std::size_t i = 0; i < lines.size(); ++i)
        if (levels[i] >= cands[k]) chosen.push_back(lines[i]);
    return Subspace::span(chosen, ambient);
  };
  auto meet = [&](std::size_t a, std::size_t b) {
    return intersect(piece(f_lines, f_levels, fs, a), piece(g_lines, g_levels, gs, b)).dim();
  };
  Index total = 0;
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < gs.size(); ++b) {
      const Index m = meet(a, b) - meet(a + 1, b) - meet(a, b + 1) + meet(a + 1, b + 1);
      if (m < 0) throw MalformedMapError("wall splitting: negative bigraded multiplicity");
      for (Index k = 0; k < m; ++k) degrees.push_back(fs[a] + gs[b]);
      total += m;
    }
  if (total != static_cast<Index>(f_lines.size()))
    throw MalformedMapError("wall splitting: block filtrations do not split the block");
}

}  // namespace

WallSplitting wall_splitting(const PLMap& phi, const Wall& wall) {
  const Fan& fan = phi.fan();
  const ConePiece& p = phi.piece(wall.sigma);
  const ConePiece& q = phi.piece(wall.sigma_prime);
  const Index r = phi.rank();
  const QVector w = to_rational(wall.normal);

  std::map<Restriction, std::vector<Index>> left, right;
  for (Index i = 0; i < r; ++i) {
    left[restriction(fan, wall.tau, p.weights[static_cast<std::size_t>(i)])].push_back(i);
    right[restriction(fan, wall.tau, q.weights[static_cast<std::size_t>(i)])].push_back(i);
  }
  std::vector<Restriction> classes;
  for (const auto& [c, lines] : left) {
    auto it = right.find(c);
    if (it == right.end() || it->second.size() != lines.size())
      throw MalformedMapError("wall splitting: the two cones restrict differently to the wall");
    classes.push_back(c);
  }
  if (left.size() != right.size()) throw MalformedMapError("wall splitting: the two cones restrict differently to the wall");

  const QVector x0 = separating_point(fan, wall.tau, classes);
  auto value = [&](const QVector& u) { return x0.dot(u); };
  auto span_above = [&](const ConePiece& piece, const Rational& c, bool strict) {
    std::vector<QVector> lines;
    for (Index i = 0; i < r; ++i) {
      const Rational v = value(piece.weights[static_cast<std::size_t>(i)]);
      if (strict ? v > c : v >= c) lines.push_back(piece.frame.line(i));
    }
    return Subspace::span(lines, r);
  };

  WallSplitting out{wall, {}};
  for (const auto& c : classes) {
    const auto& li = left[c];
    const auto& ri = right[c];
    const Rational level = value(p.weights[static_cast<std::size_t>(li.front())]);
    const Subspace higher = span_above(p, level, true);
    if (!(higher == span_above(q, level, true)) || !(span_above(p, level, false) == span_above(q, level, false)))
      throw MalformedMapError("wall splitting: the two cones induce different prevaluations on the wall");

    const QVector& base = p.weights[static_cast<std::size_t>(li.front())];
    std::vector<QVector> f_lines, g_lines;
    std::vector<Rational> f_levels, g_levels;
    for (Index i : li) {
      f_lines.push_back(higher.reduce(p.frame.line(i)));
      f_levels.push_back(transverse(p.weights[static_cast<std::size_t>(i)] - base, w));
    }
    for (Index j : ri) {
      g_lines.push_back(higher.reduce(q.frame.line(j)));
      g_levels.push_back(-transverse(q.weights[static_cast<std::size_t>(j)] - base, w));
    }
    split_block(f_lines, f_levels, g_lines, g_levels, r, out.degrees);
  }
  std::sort(out.degrees.begin(), out.degrees.end(), std::greater<>());
  return out;
}

std::vector<WallSplitting> wall_splittings(const PLMap& phi) {
  std::vector<WallSplitting> out;
  for (const auto& w : walls(phi.fan())) out.push_back(wall_splitting(phi, w));
  return out;
}

namespace {

ConvexityVerdict convexity(const std::vector<WallSplitting>& splits, bool strict) {
  for (const auto& s : splits)
    for (const auto& d : s.degrees)
      if (strict ? d <= 0 : d < 0) return {false, WallWitness{s.wall, d}};
  return {};
}

}  // namespace

ConvexityVerdict is_nef(const PLMap& phi) {
  require_complete(phi.fan());
  return convexity(wall_splittings(phi), false);
}

ConvexityVerdict is_ample(const PLMap& phi) {
  require_complete(phi.fan());
  return convexity(wall_splittings(phi), true);
}

namespace {

// F_{v > c}.
Subspace strictly_above(const Prevaluation& v, const Rational& c) {
  Subspace out = Subspace::zero(v.ambient_dim());
  for (std::size_t j = 0; j < v.labels().size() && v.labels()[j] > c; ++j) out = v.flag()[j];
  return out;
}

std::optional<GenerationWitness> first_violation(const PLMap& phi, const std::vector<Prevaluation>& at_rays,
                                                 std::size_t c, const QVector& weight) {
  const Fan& fan = phi.fan();
  const auto& p = phi.piece(c);
  for (Index i = 0; i < phi.rank(); ++i) {
    if (p.weights[static_cast<std::size_t>(i)] != weight) continue;
    for (std::size_t r = 0; r < fan.num_rays(); ++r) {
      const Rational pairing = fan.ray_q(r).dot(weight);
      const Rational value = *at_rays[r](p.frame.line(i));
      if (pairing > value) return GenerationWitness{c, i, r, pairing, value};
    }
  }
  return std::nullopt;
}

}  // namespace

GenerationVerdict is_globally_generated(const PLMap& phi) {
  const Fan& fan = phi.fan();
  require_complete(fan);
  const Index r = phi.rank();
  std::vector<Prevaluation> at_rays;
  for (std::size_t k = 0; k < fan.num_rays(); ++k) at_rays.push_back(evaluate(phi, fan.ray_q(k)));

  GenerationVerdict out;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const auto& p = phi.piece(c);
    ConePiece chosen;
    std::vector<QVector> lines;
    std::vector<bool> done(static_cast<std::size_t>(r), false);
    for (std::size_t i = 0; i < done.size(); ++i) {
      if (done[i]) continue;
      const QVector& u = p.weights[i];
      Index m = 0;
      for (std::size_t k = i; k < done.size(); ++k)
        if (p.weights[k] == u) {
          done[k] = true;
          ++m;
        }
      Subspace level = Subspace::full(r);
      for (std::size_t rho : fan.cone(c)) level = intersect(level, at_rays[rho].at_least(fan.ray_q(rho).dot(u)));
      Subspace below = Subspace::zero(r);
      for (std::size_t rho : fan.cone(c))
        below = sum(below, intersect(level, strictly_above(at_rays[rho], fan.ray_q(rho).dot(u))));
      Subspace good = level;
      for (std::size_t rho = 0; rho < fan.num_rays(); ++rho)
        good = intersect(good, at_rays[rho].at_least(fan.ray_q(rho).dot(u)));
      if (sum(good, below).dim() - below.dim() < m) {
        auto w = first_violation(phi, at_rays, c, u);
        if (!w) throw MalformedMapError("global generation: frame of cone " + std::to_string(c) + " is not adapted");
        return {false, std::move(w), {}};
      }
      for (auto& v : complement_basis(intersect(good, below), good)) {
        if (m-- == 0) break;
        lines.push_back(std::move(v));
        chosen.weights.push_back(u);
      }
    }
    chosen.frame = Frame(std::move(lines));
    for (std::size_t rho : fan.cone(c)) {
      std::vector<Rational> values;
      for (const auto& u : chosen.weights) values.push_back(fan.ray_q(rho).dot(u));
      if (!(Prevaluation::from_frame(chosen.frame, values) == at_rays[rho]))
        throw MalformedMapError("global generation: ray filtrations of cone " + std::to_string(c) +
                                " admit no common adapted frame");
    }
    out.frames.push_back(std::move(chosen));
  }
  return out;
}

PositivityReport positivity(const PLMap& phi) {
  require_complete(phi.fan());
  PositivityReport report;
  report.walls = wall_splittings(phi);
  report.nef = convexity(report.walls, false);
  report.ample = convexity(report.walls, true);
  report.globally_generated = is_globally_generated(phi);
  return report;
}

}  // namespace tvb
