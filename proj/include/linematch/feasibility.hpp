#pragma once

// Capacity-mode feasibility: does any degree assignment exist with
// Demand(p) <= deg(p) <= Cap(p) everywhere that is realizable as a
// duplicate-free bipartite pair set? Checked as a max-flow with node lower
// bounds on the unit-capacity complete bipartite graph; beyond flow scale the
// equivalent aggregated cut condition is used (differentially tested against
// the flow).

#include <algorithm>
#include <numeric>
#include <vector>

#include "linematch/flow.hpp"
#include "linematch/instance.hpp"

namespace linematch {

namespace detail {

template <class Coord>
bool exact_flow_feasible(const BasicInstance<Coord>& inst) {
  const int y = inst.s_size(), z = inst.t_size();
  // Nodes: s 0..y-1, t y..y+z-1, line source y+z, line sink y+z+1, then the
  // excess source/sink of the lower-bound elimination.
  const int src = y + z, snk = y + z + 1, ss = y + z + 2, tt = y + z + 3;
  flow::Dinic net(y + z + 4);
  long long need = 0;
  for (int i = 0; i < y; ++i) {
    long long lower = inst.s_demands[i];
    long long upper = inst.effective_cap(Side::s, i);
    net.add_edge(src, i, upper - lower);
    net.add_edge(ss, i, lower);
    need += lower;
  }
  for (int j = 0; j < z; ++j) {
    long long lower = inst.t_demands[j];
    long long upper = inst.effective_cap(Side::t, j);
    net.add_edge(y + j, snk, upper - lower);
    net.add_edge(y + j, tt, lower);
  }
  for (int i = 0; i < y; ++i)
    for (int j = 0; j < z; ++j) net.add_edge(i, y + j, 1);
  net.add_edge(snk, src, static_cast<long long>(y) * z);
  // Source deficit: src owes the sum of s lower bounds, snk holds the t sum.
  net.add_edge(src, tt, inst.demand_sum(Side::s));
  net.add_edge(ss, snk, inst.demand_sum(Side::t));
  need += inst.demand_sum(Side::t);
  return net.max_flow(ss, tt) == need;
}

// Aggregated Hoffman cut condition for the same network: for each side P with
// demands d and opposite effective caps u,
//   sum of the k largest d  <=  k * (|Q| - m) + sum of the m smallest u
// for all k, m.
template <class Coord>
bool aggregate_feasible(const BasicInstance<Coord>& inst) {
  auto orientation = [&](Side p_side) {
    Side q_side = opposite(p_side);
    std::vector<long long> d(inst.demands(p_side).begin(), inst.demands(p_side).end());
    std::sort(d.rbegin(), d.rend());
    const int q = static_cast<int>(inst.coords(q_side).size());
    std::vector<long long> u(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) u[static_cast<std::size_t>(j)] = inst.effective_cap(q_side, j);
    std::sort(u.begin(), u.end());
    std::vector<long long> pref_d(d.size() + 1, 0), pref_u(u.size() + 1, 0);
    for (std::size_t k = 0; k < d.size(); ++k) pref_d[k + 1] = pref_d[k] + d[k];
    for (std::size_t m = 0; m < u.size(); ++m) pref_u[m + 1] = pref_u[m] + u[m];
    for (std::size_t k = 0; k <= d.size(); ++k)
      for (std::size_t m = 0; m <= u.size(); ++m)
        if (pref_d[k] > static_cast<long long>(k) * (q - static_cast<long long>(m)) + pref_u[m])
          return false;
    return true;
  };
  return orientation(Side::s) && orientation(Side::t);
}

}  // namespace detail

template <class Coord>
bool feasibility_flow_check(const BasicInstance<Coord>& inst) {
  const long long y = inst.s_size(), z = inst.t_size();
  if (y == 0 && z == 0) return true;
  if (y == 0 || z == 0) return false;  // demands are positive
  for (int i = 0; i < y; ++i)
    if (inst.s_demands[i] > z) return false;
  for (int j = 0; j < z; ++j)
    if (inst.t_demands[j] > y) return false;
  if (y * z <= 250000) return detail::exact_flow_feasible(inst);
  return detail::aggregate_feasible(inst);
}

}  // namespace linematch
