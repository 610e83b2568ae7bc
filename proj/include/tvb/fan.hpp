#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvb/linear.hpp"
#include "tvb/rational.hpp"

namespace tvb {

using RayIndices = std::vector<std::size_t>;

/// A rational fan given by primitive ray generators and its maximal cones.
/// Construction only checks shape (lengths and index ranges); the geometric
/// conditions are reported by validate().
class Fan {
 public:
  Fan() = default;
  Fan(int rank, std::vector<IntVector> rays, std::vector<RayIndices> max_cones);

  int rank() const { return rank_; }
  std::size_t num_rays() const { return rays_.size(); }
  std::size_t num_cones() const { return cones_.size(); }

  const IntVector& ray(std::size_t i) const { return rays_.at(i); }
  QVector ray_q(std::size_t i) const { return to_rational(rays_.at(i)); }
  const std::vector<IntVector>& rays() const { return rays_; }

  /// Ray indices of a maximal cone, sorted ascending.
  const RayIndices& cone(std::size_t c) const { return cones_.at(c); }
  const std::vector<RayIndices>& cones() const { return cones_; }

  /// Rows are the ray generators of the given ray set.
  QMatrix generators(const RayIndices& rays) const;
  QMatrix cone_generators(std::size_t c) const { return generators(cone(c)); }

  std::vector<std::size_t> cones_containing_ray(std::size_t ray) const;
  bool is_simplicial(std::size_t c) const;
  /// Simplicial and the generators extend to a lattice basis.
  bool is_smooth(std::size_t c) const;

  friend bool operator==(const Fan& a, const Fan& b);

 private:
  int rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<RayIndices> cones_;
};

/// The codimension-one cone shared by two maximal cones, with the primitive
/// normal `normal` generating tau-perp and positive on sigma.
struct Wall {
  RayIndices tau;
  std::size_t sigma = 0;
  std::size_t sigma_prime = 0;
  IntVector normal;
};

struct FanDiagnostics {
  bool primitive = true;
  bool distinct_rays = true;
  bool simplicial = true;
  bool proper_intersections = true;
  bool complete = false;
  std::vector<std::string> issues;

  bool valid() const { return primitive && distinct_rays && simplicial && proper_intersections; }
};

FanDiagnostics validate(const Fan& fan);

/// Throws UnsupportedError for non-simplicial cones and PreconditionError for
/// other structural defects.
void require_valid(const Fan& fan);
void require_complete(const Fan& fan);

/// One wall per facet shared by two maximal cones, ordered by (sigma, tau).
/// Throws IncompleteFanError when a facet is not shared by exactly two cones.
std::vector<Wall> walls(const Fan& fan);

/// Coefficients of x in the generators of `rays` when x lies in their span.
std::optional<QVector> cone_coordinates(const Fan& fan, const RayIndices& rays, const QVector& x);

bool cone_contains(const Fan& fan, std::size_t cone, const QVector& x);

/// Sum of the cone's generators, a point of its relative interior.
QVector relint_sample(const Fan& fan, const RayIndices& rays);

/// First maximal cone containing x.
std::optional<std::size_t> locate(const Fan& fan, const QVector& x);

/// Primitive integer vector on the ray through a nonzero rational vector.
IntVector primitive_vector(const QVector& v);

RayIndices common_rays(const RayIndices& a, const RayIndices& b);

// Standard fans used by fixtures and tests.
Fan projective_space_fan(int n);
Fan p1_times_p1_fan();

}  // namespace tvb
