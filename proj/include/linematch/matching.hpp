#pragma once

// Matchings (sets of cross-side pairs), cost accounting and feasibility
// validation shared by the solvers and the oracle.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "linematch/error.hpp"
#include "linematch/instance.hpp"

namespace linematch {

enum class MatchMode { demand_only, demand_and_capacity };

inline const char* to_string(MatchMode mode) {
  return mode == MatchMode::demand_only ? "ommd" : "ommdc";
}

template <class Coord>
struct BasicMatching {
  // (s index, t index) pairs, duplicate-free, lexicographically sorted.
  std::vector<std::pair<int, int>> pairs;
  Coord total_cost = Coord(0);
};

using Matching = BasicMatching<long long>;
using RealMatching = BasicMatching<double>;

template <class Coord>
Coord matching_cost(const BasicInstance<Coord>& inst, const BasicMatching<Coord>& m) {
  Coord sum = Coord(0);
  for (const auto& [si, ti] : m.pairs) {
    if (si < 0 || si >= inst.s_size() || ti < 0 || ti >= inst.t_size())
      fail(ErrorKind::IndexOutOfRange, "pair (" + std::to_string(si) + "," +
                                           std::to_string(ti) + ") is out of range");
    Coord a = inst.s_coords[si];
    Coord b = inst.t_coords[ti];
    sum += a < b ? b - a : a - b;
  }
  return sum;
}

template <class Coord>
std::pair<std::vector<int>, std::vector<int>> degree_vectors(const BasicInstance<Coord>& inst,
                                                             const BasicMatching<Coord>& m) {
  std::vector<int> ds(inst.s_size(), 0), dt(inst.t_size(), 0);
  for (const auto& [si, ti] : m.pairs) {
    if (si >= 0 && si < inst.s_size()) ++ds[si];
    if (ti >= 0 && ti < inst.t_size()) ++dt[ti];
  }
  return {std::move(ds), std::move(dt)};
}

enum class ConstraintKind { unmet_demand, exceeded_capacity, duplicate_pair, invalid_index };

inline const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::unmet_demand: return "unmet_demand";
    case ConstraintKind::exceeded_capacity: return "exceeded_capacity";
    case ConstraintKind::duplicate_pair: return "duplicate_pair";
    case ConstraintKind::invalid_index: return "invalid_index";
  }
  return "unknown";
}

struct Violation {
  ConstraintKind kind;
  Side side;
  int index;
  std::string detail;
};

struct ValidationReport {
  bool feasible = true;
  std::vector<Violation> violations;

  void add(ConstraintKind kind, Side side, int index, std::string detail) {
    feasible = false;
    violations.push_back({kind, side, index, std::move(detail)});
  }
};

// Feasibility report for a candidate matching. Never throws: every failing
// point (and malformed pair) becomes a violation entry.
template <class Coord>
ValidationReport validate_matching(const BasicInstance<Coord>& inst,
                                   const BasicMatching<Coord>& m, MatchMode mode) {
  ValidationReport report;

  bool indices_ok = true;
  for (const auto& [si, ti] : m.pairs) {
    if (si < 0 || si >= inst.s_size()) {
      report.add(ConstraintKind::invalid_index, Side::s, si, "s index out of range");
      indices_ok = false;
    }
    if (ti < 0 || ti >= inst.t_size()) {
      report.add(ConstraintKind::invalid_index, Side::t, ti, "t index out of range");
      indices_ok = false;
    }
  }
  {
    auto sorted = m.pairs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1])
        report.add(ConstraintKind::duplicate_pair, Side::s, sorted[i].first,
                   "pair (" + std::to_string(sorted[i].first) + "," +
                       std::to_string(sorted[i].second) + ") repeated");
    }
  }
  if (!indices_ok) return report;

  auto [ds, dt] = degree_vectors(inst, m);
  auto check_side = [&](Side sd, const std::vector<int>& deg) {
    const auto& dem = inst.demands(sd);
    for (std::size_t i = 0; i < dem.size(); ++i) {
      if (deg[i] < dem[i])
        report.add(ConstraintKind::unmet_demand, sd, static_cast<int>(i),
                   "degree " + std::to_string(deg[i]) + " below demand " +
                       std::to_string(dem[i]));
      if (mode == MatchMode::demand_and_capacity) {
        int cap = inst.effective_cap(sd, static_cast<int>(i));
        if (deg[i] > cap)
          report.add(ConstraintKind::exceeded_capacity, sd, static_cast<int>(i),
                     "degree " + std::to_string(deg[i]) + " above capacity " +
                         std::to_string(cap));
      }
    }
  };
  check_side(Side::s, ds);
  check_side(Side::t, dt);
  return report;
}

// Lower bound on (and, empirically, exact count of) the pairs any minimum-cost
// feasible matching needs: each pair raises exactly one degree on each side.
template <class Coord>
long long min_pair_count(const BasicInstance<Coord>& inst) {
  return std::max(inst.demand_sum(Side::s), inst.demand_sum(Side::t));
}

template <class Coord>
void canonicalize(BasicMatching<Coord>& m, const BasicInstance<Coord>& inst) {
  std::sort(m.pairs.begin(), m.pairs.end());
  m.total_cost = matching_cost(inst, m);
}

}  // namespace linematch
