#pragma once

// Independent exact reference solvers. exhaustive_solve enumerates every
// duplicate-free pair subset (tiny instances only) and is the ground truth;
// oracle_solve is a min-cost circulation with lower bounds that scales to the
// fuzzing range and is itself validated against exhaustive_solve.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linematch/error.hpp"
#include "linematch/flow.hpp"
#include "linematch/instance.hpp"
#include "linematch/matching.hpp"

namespace linematch {

inline int oracle_size_guard() {
  if (const char* env = std::getenv("LINEMATCH_ORACLE_GUARD")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 64;
}

// Minimum-cost feasible matching by enumerating all 2^(y*z) pair subsets.
// Ties break toward the lexicographically smallest sorted pair list.
template <class Coord>
BasicMatching<Coord> exhaustive_solve(const BasicInstance<Coord>& inst, MatchMode mode) {
  const int y = inst.s_size(), z = inst.t_size();
  if (y == 0 && z == 0) return {};
  const long long cells = static_cast<long long>(y) * z;
  if (cells > 20)
    fail(ErrorKind::SizeGuardExceeded,
         "exhaustive enumeration limited to y*z <= 20, got " + std::to_string(cells));

  std::vector<Coord> bit_cost(static_cast<std::size_t>(cells));
  for (int i = 0; i < y; ++i)
    for (int j = 0; j < z; ++j) {
      Coord a = inst.s_coords[i], b = inst.t_coords[j];
      bit_cost[static_cast<std::size_t>(i) * z + j] = a < b ? b - a : a - b;
    }

  std::optional<BasicMatching<Coord>> best;
  std::vector<int> ds(static_cast<std::size_t>(y)), dt(static_cast<std::size_t>(z));
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    std::fill(ds.begin(), ds.end(), 0);
    std::fill(dt.begin(), dt.end(), 0);
    Coord cost = Coord(0);
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      int k = std::countr_zero(m);
      ++ds[static_cast<std::size_t>(k / z)];
      ++dt[static_cast<std::size_t>(k % z)];
      cost += bit_cost[static_cast<std::size_t>(k)];
    }
    bool ok = true;
    for (int i = 0; ok && i < y; ++i) {
      if (ds[i] < inst.s_demands[i]) ok = false;
      if (mode == MatchMode::demand_and_capacity && ds[i] > inst.effective_cap(Side::s, i))
        ok = false;
    }
    for (int j = 0; ok && j < z; ++j) {
      if (dt[j] < inst.t_demands[j]) ok = false;
      if (mode == MatchMode::demand_and_capacity && dt[j] > inst.effective_cap(Side::t, j))
        ok = false;
    }
    if (!ok) continue;
    if (best && best->total_cost < cost) continue;
    BasicMatching<Coord> cand;
    cand.total_cost = cost;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      int k = std::countr_zero(m);
      cand.pairs.emplace_back(k / z, k % z);
    }
    if (!best || cand.total_cost < best->total_cost ||
        (cand.total_cost == best->total_cost && cand.pairs < best->pairs))
      best = std::move(cand);
  }
  if (!best)
    fail(mode == MatchMode::demand_and_capacity ? ErrorKind::InfeasibleCapacity
                                                : ErrorKind::InfeasibleDemand,
         "no feasible pair subset exists");
  return *best;
}

struct OracleFlowDebug {
  struct ArcInfo {
    int from, to;
    long long lower, upper, flow;
    double cost;
  };
  int node_count = 0;
  int source = 0, sink = 0;  // the circulation-closing endpoints
  std::vector<ArcInfo> arcs;
};

// Min-cost circulation reference solver. Network: source -> s_i with bounds
// [demand, cap], unit-capacity cross arcs costing the line distance,
// t_j -> sink with bounds [demand, cap], and a free closing arc sink -> source.
template <class Coord>
BasicMatching<Coord> oracle_solve(const BasicInstance<Coord>& inst, MatchMode mode,
                                  std::optional<int> size_guard = std::nullopt,
                                  OracleFlowDebug* debug = nullptr) {
  const int y = inst.s_size(), z = inst.t_size();
  if (y == 0 && z == 0) return {};
  const int guard = size_guard.value_or(oracle_size_guard());
  if (y + z > guard)
    fail(ErrorKind::SizeGuardExceeded, "oracle limited to n <= " + std::to_string(guard) +
                                           ", got n = " + std::to_string(y + z));
  detail::require_demands_fit(inst);

  const int src = y + z, snk = y + z + 1;
  flow::CirculationNetwork<Coord> net(y + z + 2);
  const bool caps = mode == MatchMode::demand_and_capacity;
  for (int i = 0; i < y; ++i)
    net.add_arc(src, i, inst.s_demands[i], caps ? inst.effective_cap(Side::s, i) : z, Coord(0));
  std::vector<int> cross_arc(static_cast<std::size_t>(y) * static_cast<std::size_t>(z));
  for (int i = 0; i < y; ++i)
    for (int j = 0; j < z; ++j) {
      Coord a = inst.s_coords[i], b = inst.t_coords[j];
      cross_arc[static_cast<std::size_t>(i) * z + j] =
          net.add_arc(i, y + j, 0, 1, a < b ? b - a : a - b);
    }
  for (int j = 0; j < z; ++j)
    net.add_arc(y + j, snk, inst.t_demands[j], caps ? inst.effective_cap(Side::t, j) : y,
                Coord(0));
  net.add_arc(snk, src, 0, static_cast<long long>(y) * z, Coord(0));

  bool feasible = net.solve_min_cost();
  if (debug) {
    debug->node_count = net.node_count();
    debug->source = src;
    debug->sink = snk;
    for (std::size_t a = 0; a < net.arcs().size(); ++a) {
      const auto& spec = net.arcs()[a];
      debug->arcs.push_back({spec.from, spec.to, spec.lower, spec.upper,
                             feasible ? net.flow_on(static_cast<int>(a)) : 0,
                             static_cast<double>(spec.cost)});
    }
  }
  if (!feasible)
    fail(caps ? ErrorKind::InfeasibleCapacity : ErrorKind::InfeasibleDemand,
         "no feasible circulation exists");

  BasicMatching<Coord> out;
  for (int i = 0; i < y; ++i)
    for (int j = 0; j < z; ++j)
      if (net.flow_on(cross_arc[static_cast<std::size_t>(i) * z + j]) > 0)
        out.pairs.emplace_back(i, j);
  canonicalize(out, inst);
  return out;
}

}  // namespace linematch
