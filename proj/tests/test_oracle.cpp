#include <doctest.h>

#include "maxmin/oracle.hpp"
#include "support/examples.hpp"

using namespace maxmin;
using namespace maxmin::testing;

TEST_CASE("power iteration reaches the known eigenvalues") {
  CHECK(oracle::power_lambda(stabilization_example(), Threshold(2, 4)) == ExtScalar(11, 2));
  CHECK(oracle::power_lambda(refinement_example(), Threshold(2, 4)) == ExtScalar(7));
  CHECK(oracle::power_lambda(multiple_columns_example(), Threshold(2, 4)) == ExtScalar(4));
  CHECK(oracle::power_lambda(eigenspace_example(), Threshold(2, 3)) == ExtScalar(4));
  CHECK(oracle::power_lambda(eigenspace_example(), Threshold(1, 3)) == ExtScalar(1));
  CHECK(oracle::power_lambda(eigenspace_example(), Threshold(3, 3)) == ExtScalar(6));
}

TEST_CASE("orbit records an exact repeat") {
  const oracle::OrbitRecord o = oracle::power_orbit(stabilization_example(), Threshold(2, 4), 1000);
  REQUIRE(o.detected_period);
  const auto [k1, k2] = *o.detected_period;
  CHECK(k1 < k2);
  CHECK(o.states[k1] == o.states[k2]);
  CHECK((o.shifts[k2] - o.shifts[k1]).divided_by(long(k2 - k1)) == ExtScalar(11, 2));
  for (const Vector& s : o.states) CHECK(s[0] == ExtScalar(0));
}

TEST_CASE("power iteration gives up honestly") {
  CHECK_FALSE(oracle::power_lambda(stabilization_example(), Threshold(2, 4), 1));
}

TEST_CASE("simple cycle enumeration") {
  const Matrix a = eigenspace_example();
  const auto cycles = oracle::enumerate_simple_cycles(a);
  CHECK(cycles.size() == 8);
  for (const auto& c : cycles) CHECK(mean_of_cycle(a, c.nodes) == c.mean);
  const auto means = oracle::enumerate_cycle_means(a);
  CHECK(means.front() == ExtScalar(1));
  CHECK(means.back() == ExtScalar(6));
  CHECK(std::is_sorted(means.begin(), means.end()));
  CHECK(std::adjacent_find(means.begin(), means.end()) == means.end());
  CHECK_THROWS_AS(oracle::enumerate_simple_cycles(Matrix(11)), DimensionTooLarge);
}

TEST_CASE("cross check accepts sound reports and flags tampered ones") {
  const Matrix a = refinement_example();
  const Threshold t(2, 4);
  SolveReport r = solve(a, t);
  CHECK(oracle::cross_check(r, a, t).empty());

  SolveReport wrong_lambda = r;
  wrong_lambda.lambda = ExtScalar(8);
  CHECK_FALSE(oracle::cross_check(wrong_lambda, a, t).empty());

  SolveReport wrong_vector = r;
  (*wrong_vector.eigenvector)[0] += ExtScalar(1);
  CHECK_FALSE(oracle::cross_check(wrong_vector, a, t).empty());

  SolveReport bad_bounds = r;
  bad_bounds.initial_bounds.u = ExtScalar(6);
  CHECK_FALSE(oracle::cross_check(bad_bounds, a, t).empty());
}
