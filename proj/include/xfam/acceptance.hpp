// The acceptance matrix: formula tables, search-vs-formula agreement,
// uniqueness class counts, injection verification and the randomized property
// batteries. Each check returns PASS/FAIL/SKIPPED with a human-readable
// explanation; the CLI verify-suite and the test suite both drive these.
#pragma once

#include <string>
#include <vector>

namespace xfam::acceptance {

struct CheckOutcome {
  std::string name;
  std::string outcome;  // PASS | FAIL | SKIPPED
  std::string detail;
  long long wall_ms = 0;
  bool passed() const { return outcome == "PASS"; }
};

CheckOutcome formula_table();
CheckOutcome search_vs_formula(int jobs);
CheckOutcome uniqueness_classes(int jobs);
CheckOutcome initial_pair_bound();
CheckOutcome nonempty_pair_bound();
CheckOutcome phi_injection();
CheckOutcome shifting_properties();
CheckOutcome ad_extremis_properties();
CheckOutcome noncover_bound();
CheckOutcome inequality_checkers();
CheckOutcome chain_identity();

std::vector<CheckOutcome> run_small(int jobs);

// Adds the stretch instances on top of the small matrix.
std::vector<CheckOutcome> run_full(int jobs);

}  // namespace xfam::acceptance
