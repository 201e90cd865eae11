// Acceptance gate: one test case per criterion, each printing its PASS/FAIL
// line with the measured wall time.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <thread>

#include "xfam/acceptance.hpp"

using xfam::acceptance::CheckOutcome;

namespace {

int suite_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw >= 2 ? static_cast<int>(std::min(hw, 8u)) : 1;
}

void run(CheckOutcome (*fn)(), const char* label) {
  CheckOutcome o = fn();
  std::printf("%s  %s --%s  (%lld ms)\n", o.outcome.c_str(), label, o.detail.c_str(), o.wall_ms);
  INFO(o.detail);
  CHECK(o.outcome == "PASS");
}

}  // namespace

TEST_CASE("c01_formula_table") { run(&xfam::acceptance::formula_table, "c01_formula_table"); }

TEST_CASE("c02_search_matches_closed_form") {
  CheckOutcome o = xfam::acceptance::search_vs_formula(suite_jobs());
  std::printf("%s  c02_search_matches_closed_form --%s  (%lld ms)\n", o.outcome.c_str(),
              o.detail.c_str(), o.wall_ms);
  INFO(o.detail);
  CHECK(o.outcome == "PASS");
}

TEST_CASE("c03_optimum_uniqueness_classes") {
  CheckOutcome o = xfam::acceptance::uniqueness_classes(suite_jobs());
  std::printf("%s  c03_optimum_uniqueness_classes --%s  (%lld ms)\n", o.outcome.c_str(),
              o.detail.c_str(), o.wall_ms);
  INFO(o.detail);
  CHECK(o.outcome == "PASS");
}

TEST_CASE("c04_initial_pair_bound") {
  run(&xfam::acceptance::initial_pair_bound, "c04_initial_pair_bound");
}

TEST_CASE("c05_nonempty_pair_bound_and_strictness") {
  run(&xfam::acceptance::nonempty_pair_bound, "c05_nonempty_pair_bound_and_strictness");
}

TEST_CASE("c06_prefix_injection_verification") {
  run(&xfam::acceptance::phi_injection, "c06_prefix_injection_verification");
}

TEST_CASE("c07_shifting_property_battery") {
  run(&xfam::acceptance::shifting_properties, "c07_shifting_property_battery");
}

TEST_CASE("c08_shifting_ad_extremis_battery") {
  run(&xfam::acceptance::ad_extremis_properties, "c08_shifting_ad_extremis_battery");
}

TEST_CASE("c09_noncover_count_bound") {
  run(&xfam::acceptance::noncover_bound, "c09_noncover_count_bound");
}

TEST_CASE("c10_inequality_checker_battery") {
  run(&xfam::acceptance::inequality_checkers, "c10_inequality_checker_battery");
}

TEST_CASE("c11_chain_counting_identity") {
  run(&xfam::acceptance::chain_identity, "c11_chain_counting_identity");
}
