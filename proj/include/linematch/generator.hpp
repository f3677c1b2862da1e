#pragma once

// Seed-deterministic random instances for fuzzing, the acceptance suite and
// the scaling benchmark. A fixed (count, seed, max_n, mode) tuple always
// produces the same byte sequence of instances, independent of the standard
// library's distribution implementations.

#include <cstdint>
#include <vector>

#include "linematch/instance.hpp"
#include "linematch/matching.hpp"

namespace linematch {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Fuzzing distribution: n in [2, max_n] points with distinct integer
// coordinates in [0, 100], random side split, demands uniform in
// [1, min(3, opposite side size)], and in capacity mode caps uniform in
// [demand, demand + 2]. Capacity draws may be infeasible by design.
Instance random_small_instance(SplitMix64& rng, int max_n, MatchMode mode);

// Shapes with y*z <= 20 for cross-checking the two oracles.
Instance random_enumerable_instance(SplitMix64& rng, MatchMode mode);

// Benchmark shape: n points, unit demands, random side interleaving, distinct
// coordinates over a wide range; capacity mode gets caps of demand + 1.
Instance bench_instance(SplitMix64& rng, int n, MatchMode mode);

}  // namespace linematch
