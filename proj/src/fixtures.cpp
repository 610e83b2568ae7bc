#include "tvb/fixtures.hpp"

namespace tvb {

BundleFixture tangent_pn(int n) {
  Fan fan = projective_space_fan(n);
  const auto rank = static_cast<Index>(n);
  RayFiltrationData data{rank, {}};
  for (std::size_t r = 0; r < fan.num_rays(); ++r)
    data.rays.emplace_back(rank, std::vector<FiltrationJump>{{0, Subspace::full(rank)},
                                                             {1, Subspace::span({fan.ray_q(r)}, rank)}});
  auto w = [&](Index i) { return QVector(QVector::Unit(rank, i)); };
  std::vector<ConePiece> pieces;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    ConePiece p;
    std::vector<QVector> lines;
    const auto k = static_cast<Index>(c);
    for (std::size_t r : fan.cone(c)) {
      lines.push_back(fan.ray_q(r));
      const auto j = static_cast<Index>(r);
      if (k == rank)
        p.weights.push_back(w(j));
      else if (j < rank)
        p.weights.push_back(w(j) - w(k));
      else
        p.weights.push_back(-w(k));
    }
    p.frame = Frame(std::move(lines));
    pieces.push_back(std::move(p));
  }
  PLMap expected(fan, rank, std::move(pieces));
  return {std::move(fan), std::move(data), std::move(expected)};
}

PLMap divisor_map(const Fan& fan, const std::vector<Rational>& a) {
  if (a.size() != fan.num_rays()) throw DimensionMismatch("divisor: one coefficient per ray");
  std::vector<ConePiece> pieces;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    QVector target(static_cast<Index>(fan.cone(c).size()));
    for (std::size_t k = 0; k < fan.cone(c).size(); ++k) target(static_cast<Index>(k)) = a[fan.cone(c)[k]];
    auto u = solve(fan.cone_generators(c), target);
    if (!u) throw PreconditionError("divisor: no covector takes the given values on cone " + std::to_string(c));
    pieces.push_back({Frame::standard(1), {*u}});
  }
  return PLMap(fan, 1, std::move(pieces));
}

BundleFixture line_bundle(const Fan& fan, const std::vector<std::int64_t>& a) {
  RayFiltrationData data{1, {}};
  std::vector<Rational> q;
  for (auto v : a) {
    data.rays.push_back(RayFiltration::trivial(1, v));
    q.emplace_back(v);
  }
  return {fan, std::move(data), divisor_map(fan, q)};
}

BundleFixture trivial_bundle(const Fan& fan, Index rank) {
  RayFiltrationData data{rank, std::vector<RayFiltration>(fan.num_rays(), RayFiltration::trivial(rank))};
  std::vector<ConePiece> pieces(fan.num_cones(),
                                ConePiece{Frame::standard(rank), std::vector<QVector>(static_cast<std::size_t>(rank),
                                                                                     QVector::Zero(fan.rank()))});
  return {fan, std::move(data), PLMap(fan, rank, std::move(pieces))};
}

}  // namespace tvb
