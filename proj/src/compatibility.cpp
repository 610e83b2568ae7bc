#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "tvb/plmap.hpp"

namespace tvb {

namespace {

using Tuple = std::vector<std::int64_t>;

// Intersections I(a) = cap_j E^{rho_j}_{a_j}, memoised by level tuple.
class ConeLattice {
 public:
  ConeLattice(const RayFiltrationData& data, const RayIndices& rays) : data_(data), rays_(rays) {}

  const Subspace& at(const Tuple& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    Subspace s = Subspace::full(data_.rank);
    for (std::size_t j = 0; j < rays_.size() && !s.is_zero(); ++j) s = intersect(s, data_.rays[rays_[j]].at(a[j]));
    return cache_.emplace(a, std::move(s)).first->second;
  }

  std::vector<Tuple> candidates() const {
    std::vector<Tuple> out{{}};
    for (std::size_t r : rays_) {
      std::vector<Tuple> next;
      for (const auto& t : out)
        for (std::int64_t l : data_.rays[r].levels()) {
          Tuple u = t;
          u.push_back(l);
          next.push_back(std::move(u));
        }
      out = std::move(next);
    }
    return out;
  }

  std::int64_t multiplicity(const Tuple& a) {
    const std::size_t m = a.size();
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Tuple b = a;
      int sign = 1;
      for (std::size_t j = 0; j < m; ++j)
        if (mask >> j & 1) {
          ++b[j];
          sign = -sign;
        }
      total += sign * at(b).dim();
    }
    return total;
  }

 private:
  const RayFiltrationData& data_;
  const RayIndices& rays_;
  std::map<Tuple, Subspace> cache_;
};

void require_shape(const Fan& fan, const RayFiltrationData& data) {
  if (data.rays.size() != fan.num_rays())
    throw DimensionMismatch("filtration data has " + std::to_string(data.rays.size()) + " rays, fan has " +
                            std::to_string(fan.num_rays()));
  for (const auto& f : data.rays)
    if (f.rank() != data.rank) throw DimensionMismatch("ray filtrations live in spaces of different dimension");
}

struct ConeOutcome {
  std::optional<ConePiece> piece;
  Incompatible failure;
};

ConeOutcome solve_cone(const Fan& fan, const RayFiltrationData& data, std::size_t c, const SolveOptions& options) {
  const RayIndices& rays = fan.cone(c);
  ConeLattice lattice(data, rays);
  auto reject = [&](Incompatible::Kind kind, Tuple t, std::string detail) {
    return ConeOutcome{std::nullopt, Incompatible{kind, c, std::move(t), std::move(detail)}};
  };

  std::vector<Tuple> tuples = lattice.candidates();
  std::map<Tuple, std::int64_t> mult;
  std::int64_t total = 0;
  for (const auto& a : tuples) {
    const std::int64_t m = lattice.multiplicity(a);
    if (m < 0) return reject(Incompatible::Kind::dimension_consistency, a, "negative multiplicity " + std::to_string(m));
    mult[a] = m;
    total += m;
  }
  if (total != data.rank)
    return reject(Incompatible::Kind::dimension_consistency, {},
                  "multiplicities sum to " + std::to_string(total) + ", rank is " + std::to_string(data.rank));
  for (const auto& a : tuples) {
    std::int64_t above = 0;
    for (const auto& [b, m] : mult)
      if (std::equal(a.begin(), a.end(), b.begin(), [](auto x, auto y) { return x <= y; })) above += m;
    if (above != lattice.at(a).dim())
      return reject(Incompatible::Kind::dimension_consistency, a,
                    "dim I(a) = " + std::to_string(lattice.at(a).dim()) + " but multiplicities above sum to " +
                        std::to_string(above));
  }

  // Larger tuples first: a linear extension of the reversed product order.
  std::sort(tuples.begin(), tuples.end(), [](const Tuple& x, const Tuple& y) {
    const auto sx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    const auto sy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    return sx != sy ? sx > sy : x > y;
  });

  const QMatrix g = fan.cone_generators(c);
  std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (c + 1)));
  Tuple last_tuple;
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    std::vector<QVector> lines;
    std::vector<QVector> weights;
    for (const auto& a : tuples) {
      const std::int64_t m = mult[a];
      if (m == 0) continue;
      Subspace below = Subspace::zero(data.rank);
      for (std::size_t j = 0; j < a.size(); ++j) {
        Tuple b = a;
        ++b[j];
        below = sum(below, lattice.at(b));
      }
      const Subspace& level = lattice.at(a);
      if (level.dim() - below.dim() != m)
        return reject(Incompatible::Kind::dimension_consistency, a,
                      "complement has dimension " + std::to_string(level.dim() - below.dim()) + ", expected " +
                          std::to_string(m));
      QVector target(static_cast<Index>(a.size()));
      for (std::size_t j = 0; j < a.size(); ++j) target(static_cast<Index>(j)) = Rational(a[j]);
      const auto u = solve(g, target);
      if (!u) return reject(Incompatible::Kind::dimension_consistency, a, "no weight takes these values on the rays");
      const auto chosen = attempt == 0 ? complement_basis(below, level) : random_complement_basis(below, level, rng);
      for (const auto& v : chosen) {
        lines.push_back(v);
        weights.push_back(*u);
      }
      last_tuple = a;
    }

    ConePiece piece;
    try {
      piece.frame = Frame(lines);
    } catch (const PreconditionError&) {
      continue;
    }
    piece.weights = std::move(weights);
    bool adapted = true;
    for (std::size_t j = 0; j < rays.size() && adapted; ++j) {
      std::vector<Rational> values;
      for (const auto& u : piece.weights) values.push_back(fan.ray_q(rays[j]).dot(u));
      adapted = Prevaluation::from_frame(piece.frame, values) == data.rays[rays[j]].prevaluation();
    }
    if (adapted) return ConeOutcome{std::move(piece), {}};
  }
  return reject(Incompatible::Kind::search_exhausted, last_tuple,
                "no adapted frame found after " + std::to_string(options.retries + 1) + " attempts");
}

}  // namespace

std::string to_string(Incompatible::Kind kind) {
  switch (kind) {
    case Incompatible::Kind::dimension_consistency:
      return "dimension_consistency";
    case Incompatible::Kind::search_exhausted:
      return "search_exhausted";
  }
  return "unknown";
}

std::map<Tuple, std::int64_t> cone_multiplicities(const Fan& fan, const RayFiltrationData& data, std::size_t cone) {
  require_shape(fan, data);
  ConeLattice lattice(data, fan.cone(cone));
  std::map<Tuple, std::int64_t> out;
  for (const auto& a : lattice.candidates()) out[a] = lattice.multiplicity(a);
  return out;
}

SolveResult compatibility_solve(const Fan& fan, const RayFiltrationData& data, const SolveOptions& options) {
  require_shape(fan, data);
  std::vector<ConePiece> pieces;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    auto outcome = solve_cone(fan, data, c, options);
    if (!outcome.piece) return outcome.failure;
    pieces.push_back(std::move(*outcome.piece));
  }
  return PLMap(fan, data.rank, std::move(pieces));
}

}  // namespace tvb
