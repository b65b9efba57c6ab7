#include <doctest.h>

#include "support/properties.hpp"

using namespace maxmin::testing;

namespace {

void run(const std::string& name) {
  const Property& p = property(name);
  const PropertyOutcome r = p.run(p.seed, p.cases);
  INFO(name << ": " << r.failures << " failures, first: " << r.first_failure);
  CHECK(r.cases >= p.cases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("every registered property runs") {
  for (const Property& p : properties()) CHECK(p.cases >= 1000);
}

TEST_CASE("selection_forms_agree") { run("selection_forms_agree"); }
TEST_CASE("matvec_homogeneity") { run("matvec_homogeneity"); }
TEST_CASE("matvec_monotonicity") { run("matvec_monotonicity"); }
TEST_CASE("min_max_value_matches_naive") { run("min_max_value_matches_naive"); }
TEST_CASE("min_max_value_diagonal") { run("min_max_value_diagonal"); }
TEST_CASE("zone_sequence_monotone") { run("zone_sequence_monotone"); }
TEST_CASE("zone_sequence_strongly_definite") { run("zone_sequence_strongly_definite"); }
TEST_CASE("image_inclusion") { run("image_inclusion"); }
TEST_CASE("lambda_monotone_in_p") { run("lambda_monotone_in_p"); }
TEST_CASE("extreme_p_cycle_means") { run("extreme_p_cycle_means"); }
TEST_CASE("zone_semantics") { run("zone_semantics"); }
TEST_CASE("emptiness_three_way") { run("emptiness_three_way"); }
TEST_CASE("semiring_distributivity") { run("semiring_distributivity"); }
TEST_CASE("kleene_star_closure") { run("kleene_star_closure"); }
TEST_CASE("karp_matches_enumeration") { run("karp_matches_enumeration"); }
TEST_CASE("karp_negation_duality") { run("karp_negation_duality"); }
TEST_CASE("power_lambda_invariance") { run("power_lambda_invariance"); }
TEST_CASE("bounds_soundness") { run("bounds_soundness"); }
TEST_CASE("certified_active_soundness") { run("certified_active_soundness"); }
TEST_CASE("certified_inactive_soundness") { run("certified_inactive_soundness"); }
TEST_CASE("eigenspace_containment") { run("eigenspace_containment"); }
TEST_CASE("report_consistency") { run("report_consistency"); }
TEST_CASE("json_round_trip") { run("json_round_trip"); }
