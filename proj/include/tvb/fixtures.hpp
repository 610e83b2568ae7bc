#pragma once

// Standard bundles: tangent bundles of projective spaces, toric line bundles
// and trivial bundles, together with the maps the classification must return.

#include <cstdint>
#include <vector>

#include "tvb/plmap.hpp"

namespace tvb {

struct BundleFixture {
  Fan fan;
  RayFiltrationData data;
  PLMap expected;
};

/// Tangent bundle of P^n on projective_space_fan(n), with E = Q^n = N_Q.
/// Ray i carries E in levels <= 0, span(v_i) in level 1 and 0 from level 2 on.
/// On the cone omitting ray k < n the frame is {v_j : j != k} with weights
/// w_j - w_k for j < n and -w_k for v_n; the cone omitting v_n has frame
/// v_0..v_{n-1} with weights w_0..w_{n-1}.
BundleFixture tangent_pn(int n);

/// Rank-one map with Phi(v_rho) = a_rho: per cone the covector u with
/// <v_rho, u> = a_rho on its rays.
PLMap divisor_map(const Fan& fan, const std::vector<Rational>& a);

/// Line bundle with E^rho_i = E for i <= a_rho and 0 above.
BundleFixture line_bundle(const Fan& fan, const std::vector<std::int64_t>& a);

/// All weights zero, standard frame everywhere.
BundleFixture trivial_bundle(const Fan& fan, Index rank);

}  // namespace tvb
