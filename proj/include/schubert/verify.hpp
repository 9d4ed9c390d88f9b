#pragma once

#include <string>
#include <vector>

namespace schubert {

enum class Status { Pass, Warn, Fail };

const char* status_name(Status s);

struct SuiteResult {
  std::string name;
  Status status = Status::Pass;
  std::string summary;
  std::vector<std::string> notes;  // one line per WARN or FAIL detail
  double seconds = 0;
};

struct TierBounds {
  int all_theta_max_n;  // every Theta up to this n
  int maximal_max_n;    // Theta empty up to this n
};

TierBounds tier_bounds(const std::string& tier);

SuiteResult suite_dd_zero(const TierBounds& b);
SuiteResult suite_oracle_equivalence(const TierBounds& b);
SuiteResult suite_polynomial_match(const TierBounds& b);
SuiteResult suite_torsion_formulas(const TierBounds& b);
SuiteResult suite_generator_cycles(const TierBounds& b);
SuiteResult suite_geom_identities(const TierBounds& b);

std::vector<SuiteResult> run_verification(const std::string& tier);

}  // namespace schubert
