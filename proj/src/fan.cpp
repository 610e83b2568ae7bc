#include "tvb/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace tvb {

namespace {

std::string describe(const RayIndices& rays) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < rays.size(); ++i) os << (i ? "," : "") << rays[i];
  os << '}';
  return os.str();
}

Rational determinant(QMatrix m) {
  const Index n = m.rows();
  Rational det(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      det = -det;
    }
    det *= m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      m.row(r) -= f * m.row(col);
    }
  }
  return det;
}

// gcd of all maximal minors of a k x n integer matrix with k <= n.
Integer maximal_minor_gcd(const QMatrix& g) {
  const Index k = g.rows();
  const Index n = g.cols();
  Integer acc(0);
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    QMatrix sub(k, k);
    Index c = 0;
    for (Index j = 0; j < n; ++j)
      if (pick[static_cast<std::size_t>(j)]) sub.col(c++) = g.col(j);
    const Integer d = mp::numerator(determinant(sub));
    acc = mp::gcd(acc, mp::abs(d));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return acc;
}

// The facets of a simplicial cone: its ray set with one ray removed.
std::vector<RayIndices> facets_of(const RayIndices& cone) {
  std::vector<RayIndices> out;
  for (std::size_t skip = 0; skip < cone.size(); ++skip) {
    RayIndices f;
    for (std::size_t i = 0; i < cone.size(); ++i)
      if (i != skip) f.push_back(cone[i]);
    out.push_back(std::move(f));
  }
  return out;
}

// Whether two simplicial cones meet in the face spanned by their common rays:
// infeasibility of  G_a^T l - G_b^T m = 0,  l, m >= 0,  sum of l off the common face = 1.
bool meet_in_common_face(const Fan& fan, const RayIndices& a, const RayIndices& b) {
  const RayIndices shared = common_rays(a, b);
  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::binary_search(shared.begin(), shared.end(), a[i])) off.push_back(i);
  if (off.empty()) return true;
  const Index n = fan.rank();
  const Index na = static_cast<Index>(a.size());
  const Index nb = static_cast<Index>(b.size());
  QMatrix lp = QMatrix::Zero(n + 1, na + nb);
  lp.topLeftCorner(n, na) = fan.generators(a).transpose();
  lp.topRightCorner(n, nb) = -fan.generators(b).transpose();
  for (std::size_t i : off) lp(n, static_cast<Index>(i)) = Rational(1);
  QVector rhs = QVector::Zero(n + 1);
  rhs(n) = Rational(1);
  return !has_nonnegative_solution(lp, rhs);
}

}  // namespace

Fan::Fan(int rank, std::vector<IntVector> rays, std::vector<RayIndices> max_cones)
    : rank_(rank), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (rank_ < 1) throw PreconditionError("fan rank must be positive");
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].size() != rank_)
      throw DimensionMismatch("ray " + std::to_string(i) + " does not have length " + std::to_string(rank_));
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto& cone = cones_[c];
    if (cone.empty()) throw PreconditionError("maximal cone " + std::to_string(c) + " has no rays");
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw PreconditionError("maximal cone " + std::to_string(c) + " repeats a ray");
    if (cone.back() >= rays_.size())
      throw PreconditionError("maximal cone " + std::to_string(c) + " refers to a missing ray");
  }
}

bool operator==(const Fan& a, const Fan& b) {
  if (a.rank_ != b.rank_ || a.rays_.size() != b.rays_.size() || a.cones_ != b.cones_) return false;
  for (std::size_t i = 0; i < a.rays_.size(); ++i)
    if (a.rays_[i] != b.rays_[i]) return false;
  return true;
}

QMatrix Fan::generators(const RayIndices& rays) const {
  QMatrix g(static_cast<Index>(rays.size()), rank_);
  for (std::size_t i = 0; i < rays.size(); ++i) g.row(static_cast<Index>(i)) = ray_q(rays[i]).transpose();
  return g;
}

std::vector<std::size_t> Fan::cones_containing_ray(std::size_t ray) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (std::binary_search(cones_[c].begin(), cones_[c].end(), ray)) out.push_back(c);
  return out;
}

bool Fan::is_simplicial(std::size_t c) const {
  return tvb::rank(cone_generators(c)) == static_cast<Index>(cone(c).size());
}

bool Fan::is_smooth(std::size_t c) const {
  if (!is_simplicial(c)) return false;
  return maximal_minor_gcd(cone_generators(c)) == 1;
}

RayIndices common_rays(const RayIndices& a, const RayIndices& b) {
  RayIndices out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FanDiagnostics validate(const Fan& fan) {
  FanDiagnostics d;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    std::int64_t g = 0;
    for (Index k = 0; k < fan.ray(i).size(); ++k) g = std::gcd(g, fan.ray(i)(k));
    if (g != 1) {
      d.primitive = false;
      d.issues.push_back("ray " + std::to_string(i) + (g == 0 ? " is zero" : " is not primitive (gcd " + std::to_string(g) + ")"));
    }
    for (std::size_t j = 0; j < i; ++j)
      if (fan.ray(i) == fan.ray(j)) {
        d.distinct_rays = false;
        d.issues.push_back("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      }
  }
  for (std::size_t c = 0; c < fan.num_cones(); ++c)
    if (!fan.is_simplicial(c)) {
      d.simplicial = false;
      d.issues.push_back("cone " + std::to_string(c) + " " + describe(fan.cone(c)) + " is not simplicial (unsupported)");
    }
  if (!d.primitive || !d.simplicial) return d;

  for (std::size_t a = 0; a < fan.num_cones(); ++a)
    for (std::size_t b = a + 1; b < fan.num_cones(); ++b)
      if (!meet_in_common_face(fan, fan.cone(a), fan.cone(b))) {
        d.proper_intersections = false;
        d.issues.push_back("cones " + std::to_string(a) + " and " + std::to_string(b) +
                           " do not intersect in a common face");
      }
  if (!d.valid()) return d;

  // Completeness: every facet shared by exactly two full-dimensional cones,
  // and the cones connected through those facets.
  bool complete = fan.num_cones() > 0;
  std::map<RayIndices, std::vector<std::size_t>> facet_owners;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    if (static_cast<int>(fan.cone(c).size()) != fan.rank()) complete = false;
    for (auto& f : facets_of(fan.cone(c))) facet_owners[f].push_back(c);
  }
  if (complete) {
    for (const auto& [facet, owners] : facet_owners)
      if (owners.size() != 2) {
        complete = false;
        break;
      }
  }
  if (complete) {
    std::vector<std::vector<std::size_t>> adj(fan.num_cones());
    for (const auto& [facet, owners] : facet_owners) {
      adj[owners[0]].push_back(owners[1]);
      adj[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(fan.num_cones(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      const auto c = q.front();
      q.pop();
      for (auto nb : adj[c])
        if (!seen[nb]) {
          seen[nb] = true;
          ++count;
          q.push(nb);
        }
    }
    complete = count == fan.num_cones();
  }
  d.complete = complete;
  return d;
}

void require_valid(const Fan& fan) {
  const auto d = validate(fan);
  if (!d.simplicial) throw UnsupportedError(d.issues.front());
  if (!d.valid()) throw PreconditionError("invalid fan: " + d.issues.front());
}

void require_complete(const Fan& fan) {
  const auto d = validate(fan);
  if (!d.simplicial) throw UnsupportedError(d.issues.front());
  if (!d.valid()) throw PreconditionError("invalid fan: " + d.issues.front());
  if (!d.complete) throw IncompleteFanError("fan is not complete");
}

IntVector primitive_vector(const QVector& v) {
  Integer lcm(1);
  for (Index i = 0; i < v.size(); ++i) lcm = mp::lcm(lcm, mp::denominator(v(i)));
  std::vector<Integer> ints;
  Integer g(0);
  for (Index i = 0; i < v.size(); ++i) {
    ints.push_back(mp::numerator(v(i)) * (lcm / mp::denominator(v(i))));
    g = mp::gcd(g, mp::abs(ints.back()));
  }
  if (g == 0) throw PreconditionError("primitive_vector: zero vector");
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Integer(ints[static_cast<std::size_t>(i)] / g).convert_to<std::int64_t>();
  return out;
}

std::vector<Wall> walls(const Fan& fan) {
  require_valid(fan);
  std::map<RayIndices, std::vector<std::size_t>> facet_owners;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    if (static_cast<int>(fan.cone(c).size()) != fan.rank())
      throw IncompleteFanError("cone " + std::to_string(c) + " is not full-dimensional");
    for (auto& f : facets_of(fan.cone(c))) facet_owners[f].push_back(c);
  }
  std::vector<Wall> out;
  for (const auto& [facet, owners] : facet_owners) {
    if (owners.size() != 2)
      throw IncompleteFanError("facet " + describe(facet) + " is shared by " + std::to_string(owners.size()) +
                               " maximal cones");
    Wall w;
    w.tau = facet;
    w.sigma = std::min(owners[0], owners[1]);
    w.sigma_prime = std::max(owners[0], owners[1]);
    const QMatrix kernel = kernel_basis(fan.generators(facet));
    IntVector normal = primitive_vector(kernel.col(0));
    // Orient so that the generator of sigma off tau pairs positively.
    for (std::size_t r : fan.cone(w.sigma)) {
      if (std::binary_search(facet.begin(), facet.end(), r)) continue;
      if (fan.ray(r).dot(normal) < 0) normal = -normal;
    }
    w.normal = normal;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
    return std::tie(a.sigma, a.sigma_prime, a.tau) < std::tie(b.sigma, b.sigma_prime, b.tau);
  });
  return out;
}

std::optional<QVector> cone_coordinates(const Fan& fan, const RayIndices& rays, const QVector& x) {
  if (x.size() != fan.rank()) throw DimensionMismatch("point does not have the fan's rank");
  if (rays.empty()) {
    for (Index i = 0; i < x.size(); ++i)
      if (x(i) != 0) return std::nullopt;
    return QVector(0);
  }
  return solve(fan.generators(rays).transpose(), x);
}

bool cone_contains(const Fan& fan, std::size_t cone, const QVector& x) {
  const auto lambda = cone_coordinates(fan, fan.cone(cone), x);
  if (!lambda) return false;
  for (Index i = 0; i < lambda->size(); ++i)
    if ((*lambda)(i) < 0) return false;
  return true;
}

QVector relint_sample(const Fan& fan, const RayIndices& rays) {
  QVector x = QVector::Zero(fan.rank());
  for (std::size_t r : rays) x += fan.ray_q(r);
  return x;
}

std::optional<std::size_t> locate(const Fan& fan, const QVector& x) {
  for (std::size_t c = 0; c < fan.num_cones(); ++c)
    if (cone_contains(fan, c, x)) return c;
  return std::nullopt;
}

Fan projective_space_fan(int n) {
  if (n < 1) throw PreconditionError("projective space dimension must be at least 1");
  std::vector<IntVector> rays;
  for (int i = 0; i < n; ++i) rays.push_back(IntVector::Unit(n, i));
  rays.push_back(IntVector::Constant(n, -1));
  // Cone i omits ray i, for i = 0..n.
  std::vector<RayIndices> cones;
  for (int skip = 0; skip <= n; ++skip) {
    RayIndices c;
    for (int r = 0; r <= n; ++r)
      if (r != skip) c.push_back(static_cast<std::size_t>(r));
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan p1_times_p1_fan() {
  std::vector<IntVector> rays(4, IntVector(2));
  rays[0] << 1, 0;
  rays[1] << 0, 1;
  rays[2] << -1, 0;
  rays[3] << 0, -1;
  return Fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

}  // namespace tvb
