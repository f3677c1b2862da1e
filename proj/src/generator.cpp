#include "linematch/generator.hpp"

#include <algorithm>
#include <numeric>

namespace linematch {

namespace {

// First k entries of a seeded Fisher-Yates shuffle over [0, pool).
std::vector<long long> sample_distinct(SplitMix64& rng, int k, long long pool) {
  std::vector<long long> values(static_cast<std::size_t>(pool));
  std::iota(values.begin(), values.end(), 0LL);
  for (int i = 0; i < k; ++i) {
    std::size_t j = static_cast<std::size_t>(i) +
                    static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(pool - i)));
    std::swap(values[static_cast<std::size_t>(i)], values[j]);
  }
  values.resize(static_cast<std::size_t>(k));
  return values;
}

Instance assemble(SplitMix64& rng, std::vector<long long> coords, int y, MatchMode mode,
                  int max_demand, int cap_slack) {
  const int n = static_cast<int>(coords.size());
  const int z = n - y;
  // Random side assignment: shuffle the coordinate list once more and split.
  for (int i = 0; i < n - 1; ++i) {
    std::size_t j = static_cast<std::size_t>(i) +
                    static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(coords[static_cast<std::size_t>(i)], coords[j]);
  }
  Instance inst;
  inst.s_coords.assign(coords.begin(), coords.begin() + y);
  inst.t_coords.assign(coords.begin() + y, coords.end());
  std::sort(inst.s_coords.begin(), inst.s_coords.end());
  std::sort(inst.t_coords.begin(), inst.t_coords.end());
  for (int i = 0; i < y; ++i)
    inst.s_demands.push_back(rng.range(1, std::min(max_demand, z)));
  for (int j = 0; j < z; ++j)
    inst.t_demands.push_back(rng.range(1, std::min(max_demand, y)));
  if (mode == MatchMode::demand_and_capacity) {
    inst.s_caps.emplace();
    inst.t_caps.emplace();
    for (int i = 0; i < y; ++i)
      inst.s_caps->push_back(inst.s_demands[i] + rng.range(0, cap_slack));
    for (int j = 0; j < z; ++j)
      inst.t_caps->push_back(inst.t_demands[j] + rng.range(0, cap_slack));
  }
  return inst;
}

}  // namespace

Instance random_small_instance(SplitMix64& rng, int max_n, MatchMode mode) {
  const int n = rng.range(2, max_n);
  const int y = rng.range(1, n - 1);
  return assemble(rng, sample_distinct(rng, n, 101), y, mode, 3, 2);
}

Instance random_enumerable_instance(SplitMix64& rng, MatchMode mode) {
  int y, z;
  do {
    y = rng.range(1, 6);
    z = rng.range(1, 6);
  } while (y * z > 20);
  return assemble(rng, sample_distinct(rng, y + z, 101), y, mode, 3, 2);
}

Instance bench_instance(SplitMix64& rng, int n, MatchMode mode) {
  std::vector<long long> coords = sample_distinct(rng, n, 8LL * n);
  const int y = n / 2;
  Instance inst = assemble(rng, std::move(coords), y, mode, 1, 0);
  if (mode == MatchMode::demand_and_capacity) {
    for (auto& c : *inst.s_caps) c += 1;
    for (auto& c : *inst.t_caps) c += 1;
  }
  return inst;
}

}  // namespace linematch
