#include "tvb/generators.hpp"

namespace tvb {

Frame random_frame(Index r, Rng& rng, int range) {
  std::uniform_int_distribution<int> entry(-range, range);
  for (;;) {
    QMatrix m(r, r);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) m(i, j) = entry(rng);
    if (rank(m) < r) continue;
    std::vector<QVector> lines;
    for (Index j = 0; j < r; ++j) lines.push_back(m.col(j));
    return Frame(std::move(lines));
  }
}

RayFiltrationData random_ray_filtrations(const Fan& fan, Index rank, Rng& rng, int lo, int hi, int frame_range) {
  std::uniform_int_distribution<int> value(lo, hi);
  RayFiltrationData data{rank, {}};
  for (std::size_t r = 0; r < fan.num_rays(); ++r) {
    const Frame frame = random_frame(rank, rng, frame_range);
    std::vector<Rational> values;
    for (Index i = 0; i < rank; ++i) values.emplace_back(value(rng));
    const auto jumps = to_filtration(Prevaluation::from_frame(frame, values));
    data.rays.emplace_back(rank, std::vector<FiltrationJump>(jumps.begin(), jumps.end()));
  }
  return data;
}

PLMap random_bundle(const Fan& fan, Index rank, Rng& rng, int lo, int hi, int frame_range) {
  for (std::size_t c = 0; c < fan.num_cones(); ++c)
    if (fan.cone(c).size() > 2) throw PreconditionError("random_bundle: cones with more than two rays");
  auto result = compatibility_solve(fan, random_ray_filtrations(fan, rank, rng, lo, hi, frame_range), {8, rng()});
  if (auto* phi = std::get_if<PLMap>(&result)) return std::move(*phi);
  throw Error("random_bundle: two-ray cone reported incompatible: " + std::get<Incompatible>(result).detail);
}

QVector random_lattice_point(Index n, Rng& rng, int range) {
  std::uniform_int_distribution<int> coord(-range, range);
  QVector x(n);
  for (Index i = 0; i < n; ++i) x(i) = coord(rng);
  return x;
}

}  // namespace tvb
