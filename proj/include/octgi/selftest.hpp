#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace octgi {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // short outcome line; failure analysis when red
  double seconds = 0.0;
};

/// Runs the ten acceptance criteria. Exact arithmetic throughout; random
/// suites are seeded and deterministic. include_degree5 extends the T-ideal
/// certification to multilinear degree 5 (orbit representatives).
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, bool include_degree5);

/// "[PASS] criterion 3: ..." lines, one per criterion. Timings vary run to
/// run, so they are omitted by default to keep CLI output byte-identical
/// across identical invocations.
std::string render_acceptance(const std::vector<CriterionResult>& results,
                              bool with_timings = false);

bool acceptance_all_pass(const std::vector<CriterionResult>& results);

}  // namespace octgi
