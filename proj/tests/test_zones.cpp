#include <doctest.h>

#include "maxmin/zones.hpp"
#include "support/examples.hpp"

using namespace maxmin;
using namespace maxmin::testing;

TEST_CASE("DBM construction checks") {
  CHECK_NOTHROW(Dbm(Matrix{{0, -1}, {kNegInf, 0}}));
  CHECK_THROWS_AS(Dbm(Matrix{{0, -1}, {2, 1}}), NonZeroDiagonal);
  CHECK_THROWS_AS(Dbm(Matrix{{0, kPosInf}, {2, 0}}), Error);
  CHECK(Dbm::full_space(3).matrix() == Matrix::identity(3));
  CHECK_FALSE(Dbm(Matrix{{0, -1}, {1, 0}}).is_canonical());
}

TEST_CASE("canonicalization") {
  const Dbm d(Matrix{{0, -2, 2}, {-4, 0, 0}, {-3, -1, 0}});
  const auto c = canonicalize(d);
  REQUIRE(c);
  CHECK(c->is_canonical());
  CHECK(c->matrix() == Matrix{{0, 1, 2}, {-3, 0, 0}, {-3, -1, 0}});
  CHECK(canonicalize(*c) == c);
  CHECK(is_strongly_definite(d));

  // x1 - x2 >= 1 and x2 - x1 >= 1.
  const Dbm empty(Matrix{{0, 1}, {1, 0}});
  CHECK_FALSE(canonicalize(empty));
  CHECK_FALSE(is_strongly_definite(empty));
}

TEST_CASE("membership and meet") {
  const Dbm z(Matrix{{0, -1}, {-3, 0}});  // -1 <= x1 - x2 <= 3
  CHECK(contains(z, Vector{0, 0}));
  CHECK(contains(z, Vector{3, 0}));
  CHECK(contains(z, Vector{-1, 0}));
  CHECK_FALSE(contains(z, Vector{ExtScalar(7, 2), 0}));
  CHECK_FALSE(contains(z, Vector{-2, 0}));
  const Dbm w(Matrix{{0, 2}, {kNegInf, 0}});  // x1 - x2 >= 2
  const Dbm both = meet(z, w);
  CHECK(both.matrix() == Matrix{{0, 2}, {-3, 0}});
  CHECK(contains(both, Vector{3, 0}));
  CHECK_FALSE(contains(both, Vector{1, 0}));
  CHECK_THROWS_AS(contains(z, Vector{0, 0, 0}), DimensionMismatch);
}

TEST_CASE("point DBM") {
  const Vector x{1, ExtScalar(5, 2), -4};
  const Dbm d = point_dbm(x);
  CHECK(contains(d, x));
  CHECK(contains(d, shifted(x, ExtScalar(7))));
  Vector y = x;
  y[1] += ExtScalar(1, 3);
  CHECK_FALSE(contains(d, y));
  CHECK(canonicalize(d) == d);
}

TEST_CASE("sampling stays inside and is reproducible") {
  const auto z = canonicalize(Dbm(Matrix{{0, -2, 2}, {-4, 0, 0}, {-3, -1, 0}}));
  REQUIRE(z);
  const auto pts = sample(*z, 50, 42);
  CHECK(pts.size() == 50);
  for (const Vector& x : pts) CHECK(contains(*z, x));
  CHECK(sample(*z, 50, 42) == pts);
  CHECK(sample(*z, 50, 43) != pts);

  CHECK_THROWS_AS(sample(Dbm(Matrix{{0, -1}, {-1, 0}}), 3, 1), EmptyZone);
  CHECK_THROWS_AS(sample(*canonicalize(Dbm::full_space(2)), 3, 1), EmptyZone);
}
