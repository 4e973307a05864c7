#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hss {

struct AcceptanceOptions {
  std::uint64_t seed = 20260815;
  /// Construction tolerance handed to algebra validation; the pass/fail
  /// thresholds of the individual criteria are fixed constants.
  double algebra_tol = 1e-9;
  bool parallel = false;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Run the eight acceptance criteria. Each criterion draws from its own
/// seeded generator, so serial and parallel runs produce identical results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// One "[PASS]/[FAIL] criterion N: ..." line per criterion plus a summary
/// line; returns 0 when all pass, 3 otherwise.
int print_acceptance(const std::vector<CriterionResult>& results,
                     std::ostream& os);

}  // namespace hss
