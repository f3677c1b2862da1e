#pragma once

// Shared helpers for the unit and acceptance suites: instance builders,
// structural output checks, and temp-file plumbing.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linematch/generator.hpp"
#include "linematch/instance.hpp"
#include "linematch/matching.hpp"

namespace testsupport {

using namespace linematch;

inline Instance make_instance(std::vector<long long> s, std::vector<int> alpha,
                              std::vector<long long> t, std::vector<int> beta) {
  Instance inst;
  inst.s_coords = std::move(s);
  inst.s_demands = std::move(alpha);
  inst.t_coords = std::move(t);
  inst.t_demands = std::move(beta);
  return validate_instance(std::move(inst));
}

inline Instance make_capacitated(std::vector<long long> s, std::vector<int> alpha,
                                 std::vector<int> cap_s, std::vector<long long> t,
                                 std::vector<int> beta, std::vector<int> cap_t) {
  Instance inst;
  inst.s_coords = std::move(s);
  inst.s_demands = std::move(alpha);
  inst.s_caps = std::move(cap_s);
  inst.t_coords = std::move(t);
  inst.t_demands = std::move(beta);
  inst.t_caps = std::move(cap_t);
  return validate_instance(std::move(inst));
}

struct FlatPoint {
  long long coord;
  Side side;
  int index;
};

inline std::vector<FlatPoint> merged_points(const Instance& inst) {
  std::vector<FlatPoint> pts;
  for (int i = 0; i < inst.s_size(); ++i) pts.push_back({inst.s_coords[i], Side::s, i});
  for (int j = 0; j < inst.t_size(); ++j) pts.push_back({inst.t_coords[j], Side::t, j});
  std::sort(pts.begin(), pts.end(),
            [](const FlatPoint& a, const FlatPoint& b) { return a.coord < b.coord; });
  return pts;
}

inline std::set<std::pair<int, int>> pair_set(const Matching& m) {
  return {m.pairs.begin(), m.pairs.end()};
}

inline bool contains_pair(const std::set<std::pair<int, int>>& pairs, const FlatPoint& a,
                          const FlatPoint& b) {
  if (a.side == b.side) return false;
  int si = a.side == Side::s ? a.index : b.index;
  int ti = a.side == Side::s ? b.index : a.index;
  return pairs.count({si, ti}) > 0;
}

// No crossing quadruple a <= b < c <= d (b, c one side; a, d the other) with
// pairs (a,c),(b,d) held but neither completing short pair (a,b),(c,d).
inline std::vector<std::string> crossing_violations(const Instance& inst, const Matching& m) {
  std::vector<std::string> out;
  auto pairs = pair_set(m);
  auto coord = [&](const std::pair<int, int>& pr) {
    return std::pair<long long, long long>{inst.s_coords[pr.first], inst.t_coords[pr.second]};
  };
  auto side_of = [&](const std::pair<int, int>& pr, bool lower) {
    auto [sc, tc] = coord(pr);
    return (sc < tc) == lower ? Side::s : Side::t;
  };
  for (const auto& p1 : m.pairs) {
    for (const auto& p2 : m.pairs) {
      if (p1 == p2) continue;
      auto [s1, t1] = coord(p1);
      long long a = std::min(s1, t1), c = std::max(s1, t1);
      auto [s2, t2] = coord(p2);
      long long b = std::min(s2, t2), d = std::max(s2, t2);
      if (!(a <= b && b < c && c <= d)) continue;
      // pattern requires b and c on one side, a and d on the other
      Side sb = side_of(p2, true), sc_ = side_of(p1, false);
      if (sb != sc_) continue;
      // completing pairs (a,b) and (c,d)
      FlatPoint fa{a, side_of(p1, true), side_of(p1, true) == Side::s ? p1.first : p1.second};
      FlatPoint fb{b, sb, sb == Side::s ? p2.first : p2.second};
      FlatPoint fc{c, sc_, sc_ == Side::s ? p1.first : p1.second};
      FlatPoint fd{d, side_of(p2, false), side_of(p2, false) == Side::s ? p2.first : p2.second};
      if (contains_pair(pairs, fa, fb) || contains_pair(pairs, fc, fd)) continue;
      std::ostringstream os;
      os << "crossing pairs (" << a << "," << c << ") and (" << b << "," << d
         << ") without a completing pair";
      out.push_back(os.str());
    }
  }
  return out;
}

// Every held pair (a,d) spanning an opposite-side point b and a same-side
// point c with a <= b < c <= d must come with (a,b) or (c,d). The exchange
// behind the rule adds one pair at b and one at c, so in capacity mode it is
// only forced while both midpoints have spare room.
inline std::vector<std::string> span_violations(const Instance& inst, const Matching& m,
                                                MatchMode mode) {
  std::vector<std::string> out;
  auto pairs = pair_set(m);
  auto pts = merged_points(inst);
  auto [ds, dt] = degree_vectors(inst, m);
  auto has_room = [&](const FlatPoint& f) {
    int deg = f.side == Side::s ? ds[f.index] : dt[f.index];
    int limit = mode == MatchMode::demand_and_capacity
                    ? inst.effective_cap(f.side, f.index)
                    : (f.side == Side::s ? inst.t_size() : inst.s_size());
    return deg < limit;
  };
  for (const auto& pr : m.pairs) {
    FlatPoint fa{inst.s_coords[pr.first], Side::s, pr.first};
    FlatPoint fd{inst.t_coords[pr.second], Side::t, pr.second};
    if (fa.coord > fd.coord) std::swap(fa, fd);
    for (const auto& fb : pts) {
      if (fb.side != fd.side || fb.coord < fa.coord || fb.coord > fd.coord) continue;
      for (const auto& fc : pts) {
        if (fc.side != fa.side || fc.coord <= fb.coord || fc.coord > fd.coord) continue;
        if (contains_pair(pairs, fa, fb) || contains_pair(pairs, fc, fd)) continue;
        if (!has_room(fb) || !has_room(fc)) continue;
        std::ostringstream os;
        os << "pair (" << fa.coord << "," << fd.coord << ") spans " << fb.coord << " and "
           << fc.coord << " without a completing pair";
        out.push_back(os.str());
      }
    }
  }
  return out;
}

// Capacity-mode triple rule: for b' < a < b with (b',a),(a',b) held and
// a' < a, one of (a',b') or (a,b) must be held too.
inline std::vector<std::string> triple_violations(const Instance& inst, const Matching& m) {
  std::vector<std::string> out;
  auto pairs = pair_set(m);
  auto coord = [&](const std::pair<int, int>& pr) {
    return std::pair<long long, long long>{inst.s_coords[pr.first], inst.t_coords[pr.second]};
  };
  for (const auto& p1 : m.pairs) {
    for (const auto& p2 : m.pairs) {
      if (p1 == p2) continue;
      auto [s1, t1] = coord(p1);
      auto [s2, t2] = coord(p2);
      // p1 = (b', a) with b' < a; p2 = (a', b) with a' < a < b, a' < a
      long long bp = std::min(s1, t1), a = std::max(s1, t1);
      long long ap = std::min(s2, t2), b = std::max(s2, t2);
      if (!(bp < a && a < b && ap < a)) continue;
      Side side_a = s1 > t1 ? Side::s : Side::t;
      Side side_ap = s2 < t2 ? Side::s : Side::t;
      if (side_a != side_ap) continue;  // a and a' must be the same family
      FlatPoint fa{a, side_a, side_a == Side::s ? p1.first : p1.second};
      FlatPoint fbp{bp, opposite(side_a), side_a == Side::s ? p1.second : p1.first};
      FlatPoint fap{ap, side_ap, side_ap == Side::s ? p2.first : p2.second};
      FlatPoint fb{b, opposite(side_ap), side_ap == Side::s ? p2.second : p2.first};
      if (contains_pair(pairs, fap, fbp) || contains_pair(pairs, fa, fb)) continue;
      if (ap < bp) {
        // nested case: the repair adds a pair at b' and at a, so it is only
        // forced while both have spare capacity
        auto [ds, dt] = degree_vectors(inst, m);
        auto has_room = [&](const FlatPoint& f) {
          int deg = f.side == Side::s ? ds[f.index] : dt[f.index];
          return deg < inst.effective_cap(f.side, f.index);
        };
        if (!has_room(fbp) || !has_room(fa)) continue;
      }
      std::ostringstream os;
      os << "triple " << bp << " < " << a << " < " << b << " with partner " << ap
         << " lacks a completing pair";
      out.push_back(os.str());
    }
  }
  return out;
}

// All structural requirements placed on a solver output.
inline std::vector<std::string> structural_violations(const Instance& inst, const Matching& m,
                                                      MatchMode mode) {
  std::vector<std::string> out;
  ValidationReport report = validate_matching(inst, m, mode);
  for (const auto& v : report.violations)
    out.push_back(std::string(to_string(v.kind)) + " at " + side_letter(v.side) + "[" +
                  std::to_string(v.index) + "]");
  if (m.total_cost != matching_cost(inst, m)) out.push_back("stored cost differs");
  if (static_cast<long long>(m.pairs.size()) < min_pair_count(inst))
    out.push_back("fewer pairs than the demand sums require");
  for (auto& v : crossing_violations(inst, m)) out.push_back(v);
  for (auto& v : span_violations(inst, m, mode)) out.push_back(v);
  if (mode == MatchMode::demand_and_capacity)
    for (auto& v : triple_violations(inst, m)) out.push_back(v);
  return out;
}

class TempDir {
 public:
  TempDir() {
    base_ = std::filesystem::temp_directory_path() /
            ("linematch-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    std::filesystem::create_directories(base_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(base_, ec);
  }
  std::string path(const std::string& name) const { return (base_ / name).string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path base_;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testsupport
