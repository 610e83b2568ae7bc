#pragma once

// Piecewise linear maps from a fan to the building of GL(E), stored per
// maximal cone as a frame plus one weight covector per frame line:
//   Phi(x)(e) = min{ <x, u_i> : e_i != 0 }   for x in the cone,
// where e = sum e_i is the decomposition of e along the frame.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tvb/building.hpp"
#include "tvb/fan.hpp"

namespace tvb {

struct ConePiece {
  Frame frame;
  std::vector<QVector> weights;  // weights[i] belongs to frame.line(i)
};

/// Klyachko filtration of one ray: E_i = E for i at or below the first jump
/// level, 0 above the last, and constant between jumps.
class RayFiltration {
 public:
  RayFiltration() = default;
  /// Jumps in any order. Zero subspaces are dropped and repeats merged into
  /// the higher level; the subspaces must decrease as the level increases and
  /// the lowest must be E.
  RayFiltration(Index rank, std::vector<FiltrationJump> jumps);

  static RayFiltration trivial(Index rank, std::int64_t level = 0);

  Index rank() const { return rank_; }
  /// Sorted by increasing level.
  const std::vector<FiltrationJump>& jumps() const { return jumps_; }
  std::vector<std::int64_t> levels() const;
  Subspace at(std::int64_t level) const;
  Prevaluation prevaluation() const;

  friend bool operator==(const RayFiltration&, const RayFiltration&) = default;

 private:
  Index rank_ = 0;
  std::vector<FiltrationJump> jumps_;
};

struct RayFiltrationData {
  Index rank = 0;
  std::vector<RayFiltration> rays;  // indexed like the fan's rays

  friend bool operator==(const RayFiltrationData&, const RayFiltrationData&) = default;
};

class PLMap {
 public:
  PLMap() = default;
  /// One piece per maximal cone, each with `rank` lines and weights of the fan's rank.
  PLMap(Fan fan, Index rank, std::vector<ConePiece> pieces);

  const Fan& fan() const { return fan_; }
  Index rank() const { return rank_; }
  const ConePiece& piece(std::size_t cone) const { return pieces_.at(cone); }
  const std::vector<ConePiece>& pieces() const { return pieces_; }

  /// Ray-generator pairings of all weights are integers.
  bool integral() const { return integral_; }

 private:
  Fan fan_;
  Index rank_ = 0;
  std::vector<ConePiece> pieces_;
  bool integral_ = false;
};

/// Phi(x) computed with the frame of `cone`; x must lie in that cone.
Prevaluation evaluate_on_cone(const PLMap& phi, std::size_t cone, const QVector& x);
/// Phi(x) via the first maximal cone containing x. Throws PreconditionError outside the support.
Prevaluation evaluate(const PLMap& phi, const QVector& x);

/// E^rho_i = span{ L_{sigma,j} : <v_rho, u_{sigma,j}> >= i } for any sigma containing rho.
/// Throws MalformedMapError when two incident cones disagree and
/// PreconditionError when a pairing is not an integer.
RayFiltrationData ray_filtrations(const PLMap& phi);

struct Incompatible {
  enum class Kind {
    dimension_consistency,  // certified: no adapted frame exists
    search_exhausted,       // construction failed after all retries
  };
  Kind kind = Kind::dimension_consistency;
  std::size_t cone = 0;
  std::vector<std::int64_t> tuple;  // offending level tuple, one entry per ray of the cone
  std::string detail;
};

std::string to_string(Incompatible::Kind kind);

struct SolveOptions {
  int retries = 8;
  std::uint64_t seed = 0;
};

using SolveResult = std::variant<PLMap, Incompatible>;

/// Decides Klyachko compatibility cone by cone and, when compatible, returns
/// a piecewise linear map reproducing every ray filtration.
SolveResult compatibility_solve(const Fan& fan, const RayFiltrationData& data, const SolveOptions& options = {});

/// Inclusion-exclusion multiplicities m(a) over the candidate level tuples of a cone.
std::map<std::vector<std::int64_t>, std::int64_t> cone_multiplicities(const Fan& fan, const RayFiltrationData& data,
                                                                     std::size_t cone);

struct IntegralityReport {
  bool integral = true;
  bool verified = true;  // false when a non-smooth cone was only checked on its rays
  std::vector<std::size_t> unverified_cones;
};

IntegralityReport is_integral(const PLMap& phi);

/// Frames L (x) L' in Kronecker order, weights u_i + u'_j.
PLMap tensor(const PLMap& phi, const PLMap& psi);

/// Randomised well-definedness diagnostic: compares Phi evaluated through
/// both cones at sample points of every shared face. Returns the first
/// disagreeing cone pair.
std::optional<std::pair<std::size_t, std::size_t>> find_inconsistency(const PLMap& phi, int samples_per_face,
                                                                      std::uint64_t seed);

}  // namespace tvb
