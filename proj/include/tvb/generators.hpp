#pragma once

// Random instances for fuzzing and searches. Deterministic given the engine.

#include <random>

#include "tvb/plmap.hpp"

namespace tvb {

using Rng = std::mt19937_64;

/// Invertible r x r matrix with entries in [-range, range], returned as a frame.
Frame random_frame(Index r, Rng& rng, int range = 3);

/// Each ray gets the filtration of a random frame with integer values in [lo, hi].
/// Small frame ranges make coincidences between the rays' subspaces likely.
RayFiltrationData random_ray_filtrations(const Fan& fan, Index rank, Rng& rng, int lo = -5, int hi = 5,
                                         int frame_range = 3);

/// Random bundle: random_ray_filtrations solved into a map. Requires every
/// maximal cone to have at most two rays, where compatibility is automatic.
PLMap random_bundle(const Fan& fan, Index rank, Rng& rng, int lo = -5, int hi = 5, int frame_range = 3);

/// Random point of the lattice with coordinates in [-range, range].
QVector random_lattice_point(Index n, Rng& rng, int range = 6);

}  // namespace tvb
