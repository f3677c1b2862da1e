#pragma once

// Scaling benchmark over the sweep solver: per size, the median wall time of
// repeated solves, plus the ratio between consecutive sizes.

#include <cstdint>
#include <vector>

#include "linematch/matching.hpp"

namespace linematch {

struct BenchRow {
  int size = 0;
  long long median_ns = 0;
  double ratio = 0.0;  // median / previous median
  bool has_ratio = false;
};

std::vector<BenchRow> run_scaling_bench(const std::vector<int>& sizes, int reps, MatchMode mode,
                                        std::uint64_t seed);

}  // namespace linematch
