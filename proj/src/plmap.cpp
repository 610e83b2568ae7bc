#include "tvb/plmap.hpp"

#include <algorithm>
#include <random>

namespace tvb {

RayFiltration::RayFiltration(Index rank, std::vector<FiltrationJump> jumps) : rank_(rank) {
  std::sort(jumps.begin(), jumps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [level, space] : jumps) {
    if (space.ambient_dim() != rank) throw DimensionMismatch("ray filtration: subspace in the wrong ambient space");
    if (!jumps_.empty() && jumps_.back().first == level)
      throw PreconditionError("ray filtration: level " + std::to_string(level) + " listed twice");
    if (space.is_zero()) continue;
    if (!jumps_.empty()) {
      const Subspace& below = jumps_.back().second;
      if (space == below) {
        jumps_.back().first = level;
        continue;
      }
      if (space.dim() >= below.dim() || !contains(below, space))
        throw PreconditionError("ray filtration: subspaces must strictly decrease as the level grows");
    }
    jumps_.emplace_back(level, std::move(space));
  }
  if (jumps_.empty() || !jumps_.front().second.is_full())
    throw PreconditionError("ray filtration: the lowest listed subspace must be the whole space");
}

RayFiltration RayFiltration::trivial(Index rank, std::int64_t level) {
  return RayFiltration(rank, {{level, Subspace::full(rank)}});
}

std::vector<std::int64_t> RayFiltration::levels() const {
  std::vector<std::int64_t> out;
  for (const auto& j : jumps_) out.push_back(j.first);
  return out;
}

Subspace RayFiltration::at(std::int64_t level) const {
  for (const auto& [l, space] : jumps_)
    if (l >= level) return space;
  return Subspace::zero(rank_);
}

Prevaluation RayFiltration::prevaluation() const {
  std::vector<FiltrationJump> decreasing(jumps_.rbegin(), jumps_.rend());
  return from_filtration(decreasing);
}

PLMap::PLMap(Fan fan, Index rank, std::vector<ConePiece> pieces)
    : fan_(std::move(fan)), rank_(rank), pieces_(std::move(pieces)) {
  if (pieces_.size() != fan_.num_cones()) throw PreconditionError("PL map: need exactly one piece per maximal cone");
  integral_ = true;
  for (std::size_t c = 0; c < pieces_.size(); ++c) {
    const auto& p = pieces_[c];
    if (p.frame.size() != rank_ || static_cast<Index>(p.weights.size()) != rank_)
      throw DimensionMismatch("PL map: cone " + std::to_string(c) + " does not carry " + std::to_string(rank_) + " lines");
    for (const auto& u : p.weights) {
      if (u.size() != fan_.rank()) throw DimensionMismatch("PL map: weight of the wrong length");
      for (std::size_t r : fan_.cone(c))
        if (!is_integer(fan_.ray_q(r).dot(u))) integral_ = false;
    }
  }
}

Prevaluation evaluate_on_cone(const PLMap& phi, std::size_t cone, const QVector& x) {
  if (x.size() != phi.fan().rank()) throw DimensionMismatch("evaluate: point has the wrong length");
  const auto& p = phi.piece(cone);
  std::vector<Rational> values;
  values.reserve(p.weights.size());
  for (const auto& u : p.weights) values.push_back(x.dot(u));
  return Prevaluation::from_frame(p.frame, values);
}

Prevaluation evaluate(const PLMap& phi, const QVector& x) {
  const auto cone = locate(phi.fan(), x);
  if (!cone) throw PreconditionError("evaluate: point lies outside the support of the fan");
  return evaluate_on_cone(phi, *cone, x);
}

RayFiltrationData ray_filtrations(const PLMap& phi) {
  RayFiltrationData out{phi.rank(), {}};
  for (std::size_t r = 0; r < phi.fan().num_rays(); ++r) {
    const auto cones = phi.fan().cones_containing_ray(r);
    if (cones.empty()) throw MalformedMapError("ray " + std::to_string(r) + " lies in no maximal cone");
    std::optional<RayFiltration> found;
    for (std::size_t c : cones) {
      const Prevaluation v = evaluate_on_cone(phi, c, phi.fan().ray_q(r));
      for (const auto& label : v.labels())
        if (!is_integer(label))
          throw PreconditionError("ray_filtrations: PL map is not integral on ray " + std::to_string(r));
      const auto decreasing = to_filtration(v);
      RayFiltration f(phi.rank(), {decreasing.begin(), decreasing.end()});
      if (!found) {
        found = std::move(f);
      } else if (!(*found == f)) {
        throw MalformedMapError("ray " + std::to_string(r) + ": cones " + std::to_string(cones.front()) + " and " +
                                std::to_string(c) + " induce different filtrations");
      }
    }
    out.rays.push_back(std::move(*found));
  }
  return out;
}

IntegralityReport is_integral(const PLMap& phi) {
  IntegralityReport report;
  report.integral = phi.integral();
  for (std::size_t c = 0; c < phi.fan().num_cones(); ++c)
    if (!phi.fan().is_smooth(c)) report.unverified_cones.push_back(c);
  report.verified = report.unverified_cones.empty() || !report.integral;
  return report;
}

PLMap tensor(const PLMap& phi, const PLMap& psi) {
  if (!(phi.fan() == psi.fan())) throw PreconditionError("tensor: PL maps live on different fans");
  std::vector<ConePiece> pieces;
  for (std::size_t c = 0; c < phi.fan().num_cones(); ++c) {
    const auto& a = phi.piece(c);
    const auto& b = psi.piece(c);
    std::vector<QVector> lines;
    ConePiece p;
    for (Index i = 0; i < a.frame.size(); ++i)
      for (Index j = 0; j < b.frame.size(); ++j) {
        lines.push_back(kron(a.frame.line(i), b.frame.line(j)));
        p.weights.push_back(a.weights[static_cast<std::size_t>(i)] + b.weights[static_cast<std::size_t>(j)]);
      }
    p.frame = Frame(std::move(lines));
    pieces.push_back(std::move(p));
  }
  return PLMap(phi.fan(), phi.rank() * psi.rank(), std::move(pieces));
}

std::optional<std::pair<std::size_t, std::size_t>> find_inconsistency(const PLMap& phi, int samples_per_face,
                                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 9);
  const Fan& fan = phi.fan();
  for (std::size_t a = 0; a < fan.num_cones(); ++a)
    for (std::size_t b = a + 1; b < fan.num_cones(); ++b) {
      const RayIndices face = common_rays(fan.cone(a), fan.cone(b));
      if (face.empty()) continue;
      for (int s = 0; s < samples_per_face; ++s) {
        QVector x = QVector::Zero(fan.rank());
        for (std::size_t r : face) x += Rational(coeff(rng), coeff(rng)) * fan.ray_q(r);
        if (!(evaluate_on_cone(phi, a, x) == evaluate_on_cone(phi, b, x))) return std::make_pair(a, b);
      }
    }
  return std::nullopt;
}

}  // namespace tvb
