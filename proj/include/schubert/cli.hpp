#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schubert/perm.hpp"

namespace schubert::cli {

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<std::vector<int>> k;
  std::optional<std::vector<int>> theta;
  std::string format = "text";
  std::string tier = "quick";
  bool allow_large = false;
};

// Exactly one of k / theta may be given; neither means the maximal flag.
ThetaSet resolve_theta(const RunConfig& cfg);

// Refuses (DomainError) configurations above the size cap unless allow_large
// is set, in which case a cost estimate is written to err first.
void check_cap(const ThetaSet& th, bool allow_large, std::ostream& err);

std::string cmd_homology(const RunConfig& cfg);
std::string cmd_poincare(const RunConfig& cfg);
std::string cmd_incidence(const RunConfig& cfg);
std::string cmd_generators(const RunConfig& cfg);
// Writes the report to out; returns the process exit status.
int cmd_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace schubert::cli
