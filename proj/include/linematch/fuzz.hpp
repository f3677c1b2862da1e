#pragma once

// Differential fuzzing: random instances solved by both the sweep solver and
// the circulation oracle, exact cost comparison, feasibility verdicts
// compared too. The core quality gate of the project.

#include <cstdint>
#include <string>
#include <vector>

#include "linematch/matching.hpp"

namespace linematch {

struct FuzzParams {
  long long count = 100;
  std::uint64_t seed = 0;
  int max_n = 8;
  MatchMode mode = MatchMode::demand_only;
  bool dump_failures = true;
  std::string dump_dir = ".";
};

struct FuzzMismatch {
  long long index = 0;
  std::string detail;
  std::string instance_text;
  std::string dump_path;  // empty when dumping is off or failed
};

struct FuzzOutcome {
  long long executed = 0;
  long long matched = 0;
  long long infeasible = 0;  // instances both sides rejected identically
  std::vector<FuzzMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

FuzzOutcome run_differential_fuzz(const FuzzParams& params);

}  // namespace linematch
