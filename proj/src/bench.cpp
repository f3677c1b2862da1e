#include "linematch/bench.hpp"

#include <algorithm>
#include <chrono>

#include "linematch/generator.hpp"
#include "linematch/solver.hpp"

namespace linematch {

std::vector<BenchRow> run_scaling_bench(const std::vector<int>& sizes, int reps, MatchMode mode,
                                        std::uint64_t seed) {
  std::vector<BenchRow> rows;
  long long prev_median = 0;
  for (int n : sizes) {
    SplitMix64 rng(seed ^ static_cast<std::uint64_t>(n));
    Instance inst = bench_instance(rng, n, mode);
    std::vector<long long> times;
    long long guard_cost = 0;  // keep the solve from being elided
    for (int r = 0; r < std::max(1, reps); ++r) {
      auto t0 = std::chrono::steady_clock::now();
      Matching m = mode == MatchMode::demand_only ? solve_ommd(inst) : solve_ommdc(inst);
      auto t1 = std::chrono::steady_clock::now();
      guard_cost += m.total_cost;
      asm volatile("" : : "r"(guard_cost));
      times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    (void)guard_cost;
    std::sort(times.begin(), times.end());
    BenchRow row;
    row.size = n;
    row.median_ns = times[times.size() / 2];
    if (!rows.empty() && prev_median > 0) {
      row.ratio = static_cast<double>(row.median_ns) / static_cast<double>(prev_median);
      row.has_ratio = true;
    }
    prev_median = row.median_ns;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace linematch
