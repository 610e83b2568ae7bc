#include "doctest.h"
#include "support.hpp"

using namespace tvb;
using support::ivec;
using support::qvec;

TEST_CASE("projective spaces and P1 x P1 are complete smooth fans") {
  for (int n = 1; n <= 4; ++n) {
    const Fan f = projective_space_fan(n);
    const auto d = validate(f);
    CHECK(d.valid());
    CHECK(d.complete);
    CHECK(f.num_rays() == static_cast<std::size_t>(n + 1));
    for (std::size_t c = 0; c < f.num_cones(); ++c) CHECK(f.is_smooth(c));
  }
  const auto d = validate(p1_times_p1_fan());
  CHECK(d.valid());
  CHECK(d.complete);
}

TEST_CASE("walls carry normals vanishing on tau and positive on sigma") {
  for (const Fan& f : {projective_space_fan(1), projective_space_fan(2), projective_space_fan(3), p1_times_p1_fan()}) {
    const auto ws = walls(f);
    std::size_t facets = 0;
    for (std::size_t c = 0; c < f.num_cones(); ++c) facets += f.cone(c).size();
    CHECK(ws.size() * 2 == facets);
    for (const auto& w : ws) {
      for (std::size_t r : w.tau) CHECK(f.ray(r).dot(w.normal) == 0);
      for (std::size_t r : f.cone(w.sigma))
        if (std::find(w.tau.begin(), w.tau.end(), r) == w.tau.end()) CHECK(f.ray(r).dot(w.normal) > 0);
      for (std::size_t r : f.cone(w.sigma_prime))
        if (std::find(w.tau.begin(), w.tau.end(), r) == w.tau.end()) CHECK(f.ray(r).dot(w.normal) < 0);
      CHECK(primitive_vector(to_rational(w.normal)) == w.normal);
    }
  }
  CHECK(walls(projective_space_fan(2)).size() == 3);
  CHECK(walls(projective_space_fan(3)).size() == 6);
  CHECK(walls(p1_times_p1_fan()).size() == 4);
}

TEST_CASE("validation flags each defect") {
  SUBCASE("non-primitive ray") {
    const Fan f(2, {ivec({2, 0}), ivec({0, 1})}, {{0, 1}});
    CHECK_FALSE(validate(f).primitive);
  }
  SUBCASE("duplicate rays") {
    const Fan f(2, {ivec({1, 0}), ivec({1, 0})}, {{0}, {1}});
    CHECK_FALSE(validate(f).distinct_rays);
  }
  SUBCASE("non-simplicial cone") {
    const Fan f(2, {ivec({1, 0}), ivec({1, 1}), ivec({0, 1})}, {{0, 1, 2}});
    CHECK_FALSE(validate(f).simplicial);
    CHECK_THROWS_AS(require_valid(f), UnsupportedError);
  }
  SUBCASE("overlapping cones") {
    const Fan f(2, {ivec({1, 0}), ivec({0, 1}), ivec({1, 1})}, {{0, 1}, {0, 2}});
    CHECK_FALSE(validate(f).proper_intersections);
  }
  SUBCASE("incomplete fan") {
    const Fan f(2, {ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}, {{0, 1}, {1, 2}});
    const auto d = validate(f);
    CHECK(d.valid());
    CHECK_FALSE(d.complete);
    CHECK_THROWS_AS(walls(f), IncompleteFanError);
  }
  SUBCASE("shape errors at construction") {
    CHECK_THROWS(Fan(2, {ivec({1, 0, 0})}, {{0}}));
    CHECK_THROWS(Fan(2, {ivec({1, 0})}, {{3}}));
  }
}

TEST_CASE("locating points") {
  const Fan f = projective_space_fan(2);
  CHECK(locate(f, qvec({1, 1})) == std::optional<std::size_t>(2));
  CHECK(cone_contains(f, 0, qvec({-1, -1})));
  CHECK(cone_contains(f, 1, qvec({-1, -1})));
  CHECK_FALSE(cone_contains(f, 2, qvec({-1, -1})));
  const auto coords = cone_coordinates(f, f.cone(0), qvec({-1, 0}));
  REQUIRE(coords);
  CHECK(*coords == qvec({1, 1}));
  const Fan half(2, {ivec({1, 0}), ivec({0, 1})}, {{0, 1}});
  CHECK_FALSE(locate(half, qvec({-1, 0})));
}

TEST_CASE("smoothness detects non-unimodular cones") {
  const Fan f(2, {ivec({1, 1}), ivec({1, -1})}, {{0, 1}});
  CHECK(f.is_simplicial(0));
  CHECK_FALSE(f.is_smooth(0));
  CHECK(primitive_vector(qvec({Rational(2, 3), Rational(4, 3)})) == ivec({1, 2}));
}
