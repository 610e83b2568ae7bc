#pragma once

// Splitting types along walls and the nef / ample / globally generated
// verdicts they imply.

#include <optional>
#include <vector>

#include "tvb/plmap.hpp"

namespace tvb {

/// Degrees a_i of the line bundles O(a_i) into which the bundle splits on
/// the invariant curve of a wall. Sorted decreasing.
struct WallSplitting {
  Wall wall;
  std::vector<Rational> degrees;
};

/// Throws MalformedMapError when the two cones do not induce the same
/// restriction to the wall.
WallSplitting wall_splitting(const PLMap& phi, const Wall& wall);
std::vector<WallSplitting> wall_splittings(const PLMap& phi);

struct WallWitness {
  Wall wall;
  Rational degree;
};

struct ConvexityVerdict {
  bool holds = true;
  std::optional<WallWitness> witness;  // first offending wall and degree
};

struct GenerationWitness {
  std::size_t cone = 0;
  Index line = 0;
  std::size_t ray = 0;
  Rational pairing;  // <v_rho, u_{sigma,i}>
  Rational value;    // Phi(v_rho)(e_i)
};

struct GenerationVerdict {
  bool holds = true;
  std::optional<GenerationWitness> witness;  // taken from the map's own frames
  /// When holds: per maximal cone an adapted frame, with the map's weights,
  /// whose every line e_i satisfies the inequality below.
  std::vector<ConePiece> frames;
};

/// All wall degrees >= 0.
ConvexityVerdict is_nef(const PLMap& phi);
/// All wall degrees > 0.
ConvexityVerdict is_ample(const PLMap& phi);

/// Some adapted frame of every maximal cone sigma has <v_rho, u_{sigma,i}> <=
/// Phi(v_rho)(e_i) for each line e_i and every ray rho. Adapted frames are not
/// unique, so this is decided per weight u with level tuple a on sigma:
///   cap_rho E^rho_{<v_rho, u>} + sum_j I(a + e_j) = I(a).
GenerationVerdict is_globally_generated(const PLMap& phi);

struct PositivityReport {
  std::vector<WallSplitting> walls;
  ConvexityVerdict nef;
  ConvexityVerdict ample;
  GenerationVerdict globally_generated;
};

PositivityReport positivity(const PLMap& phi);

}  // namespace tvb
