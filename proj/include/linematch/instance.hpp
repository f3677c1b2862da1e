#pragma once

// Problem instances: two point sets on the real line with per-point demands
// and optional per-point capacities. The canonical pipeline uses 64-bit
// integer coordinates so every cost comparison is exact; BasicInstance<double>
// is the real-valued mode.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linematch/error.hpp"

namespace linematch {

enum class Side : std::uint8_t { s = 0, t = 1 };

inline Side opposite(Side sd) { return sd == Side::s ? Side::t : Side::s; }
inline char side_letter(Side sd) { return sd == Side::s ? 's' : 't'; }

template <class Coord>
struct BasicInstance {
  std::vector<Coord> s_coords;
  std::vector<Coord> t_coords;
  std::vector<int> s_demands;
  std::vector<int> t_demands;
  std::optional<std::vector<int>> s_caps;
  std::optional<std::vector<int>> t_caps;

  int s_size() const { return static_cast<int>(s_coords.size()); }
  int t_size() const { return static_cast<int>(t_coords.size()); }
  int total_size() const { return s_size() + t_size(); }
  bool capacitated() const { return s_caps.has_value() || t_caps.has_value(); }

  const std::vector<Coord>& coords(Side sd) const {
    return sd == Side::s ? s_coords : t_coords;
  }
  const std::vector<int>& demands(Side sd) const {
    return sd == Side::s ? s_demands : t_demands;
  }
  const std::optional<std::vector<int>>& caps(Side sd) const {
    return sd == Side::s ? s_caps : t_caps;
  }

  // Capacity actually usable by a point: pairs are duplicate-free, so the
  // opposite side size is an implicit ceiling.
  int effective_cap(Side sd, int i) const {
    int ceiling = sd == Side::s ? t_size() : s_size();
    const auto& c = caps(sd);
    return c ? std::min((*c)[static_cast<std::size_t>(i)], ceiling) : ceiling;
  }

  long long demand_sum(Side sd) const {
    const auto& d = demands(sd);
    return std::accumulate(d.begin(), d.end(), 0LL);
  }
};

using Instance = BasicInstance<long long>;
using RealInstance = BasicInstance<double>;

namespace detail {

template <class Coord>
void sort_side(std::vector<Coord>& coords, std::vector<int>& dem,
               std::optional<std::vector<int>>& caps) {
  std::vector<int> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return coords[a] < coords[b]; });
  std::vector<Coord> c2(coords.size());
  std::vector<int> d2(coords.size());
  std::vector<int> k2(caps ? coords.size() : 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    c2[i] = coords[order[i]];
    d2[i] = dem[order[i]];
    if (caps) k2[i] = (*caps)[order[i]];
  }
  coords = std::move(c2);
  dem = std::move(d2);
  if (caps) *caps = std::move(k2);
}

template <class Coord>
std::string coord_text(Coord v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <class Coord>
void require_demands_fit(const BasicInstance<Coord>& inst) {
  const int y = inst.s_size(), z = inst.t_size();
  for (int i = 0; i < y; ++i)
    if (inst.s_demands[i] > z)
      fail(ErrorKind::InfeasibleDemand,
           "s[" + std::to_string(i) + "] demands " + std::to_string(inst.s_demands[i]) +
               " partners, only " + std::to_string(z) + " available");
  for (int j = 0; j < z; ++j)
    if (inst.t_demands[j] > y)
      fail(ErrorKind::InfeasibleDemand,
           "t[" + std::to_string(j) + "] demands " + std::to_string(inst.t_demands[j]) +
               " partners, only " + std::to_string(y) + " available");
}

}  // namespace detail

// Checks lengths, positivity, capacity floors, cross-set distinctness and
// demand feasibility, then returns the instance with each side sorted by
// coordinate (demand/cap lists permuted along).
template <class Coord>
BasicInstance<Coord> validate_instance(BasicInstance<Coord> raw) {
  if (raw.s_coords.size() != raw.s_demands.size())
    fail(ErrorKind::LengthMismatch, "s has " + std::to_string(raw.s_coords.size()) +
                                        " coordinates but " +
                                        std::to_string(raw.s_demands.size()) + " demands");
  if (raw.t_coords.size() != raw.t_demands.size())
    fail(ErrorKind::LengthMismatch, "t has " + std::to_string(raw.t_coords.size()) +
                                        " coordinates but " +
                                        std::to_string(raw.t_demands.size()) + " demands");
  if (raw.s_caps && raw.s_caps->size() != raw.s_coords.size())
    fail(ErrorKind::LengthMismatch, "cap_s length differs from s");
  if (raw.t_caps && raw.t_caps->size() != raw.t_coords.size())
    fail(ErrorKind::LengthMismatch, "cap_t length differs from t");

  if constexpr (std::is_floating_point_v<Coord>) {
    for (Coord v : raw.s_coords)
      if (!std::isfinite(v)) fail(ErrorKind::ParseError, "non-finite coordinate in s");
    for (Coord v : raw.t_coords)
      if (!std::isfinite(v)) fail(ErrorKind::ParseError, "non-finite coordinate in t");
  }

  detail::sort_side(raw.s_coords, raw.s_demands, raw.s_caps);
  detail::sort_side(raw.t_coords, raw.t_demands, raw.t_caps);

  // All points of S and T must be pairwise distinct; duplicates are rejected
  // rather than perturbed, since perturbation changes the optimal cost.
  {
    std::vector<Coord> merged;
    merged.reserve(raw.s_coords.size() + raw.t_coords.size());
    std::merge(raw.s_coords.begin(), raw.s_coords.end(), raw.t_coords.begin(),
               raw.t_coords.end(), std::back_inserter(merged));
    for (std::size_t i = 1; i < merged.size(); ++i) {
      if (merged[i] == merged[i - 1])
        fail(ErrorKind::DuplicateCoordinate,
             "coordinate " + detail::coord_text(merged[i]) +
                 " appears more than once in S ∪ T; perturb coordinates on the "
                 "caller side if coincident points are intended");
    }
  }

  auto check_side = [&](Side sd) {
    const auto& dem = raw.demands(sd);
    const auto& cap = raw.caps(sd);
    int opposite_size = sd == Side::s ? raw.t_size() : raw.s_size();
    for (std::size_t i = 0; i < dem.size(); ++i) {
      if (dem[i] <= 0)
        fail(ErrorKind::NonPositiveDemand, std::string(1, side_letter(sd)) + "[" +
                                               std::to_string(i) + "] has demand " +
                                               std::to_string(dem[i]));
      if (cap && (*cap)[i] < dem[i])
        fail(ErrorKind::CapBelowDemand, std::string(1, side_letter(sd)) + "[" +
                                            std::to_string(i) + "] has cap " +
                                            std::to_string((*cap)[i]) + " below demand " +
                                            std::to_string(dem[i]));
      if (dem[i] > opposite_size)
        fail(ErrorKind::InfeasibleDemand,
             std::string(1, side_letter(sd)) + "[" + std::to_string(i) + "] demands " +
                 std::to_string(dem[i]) + " distinct partners but the other side has only " +
                 std::to_string(opposite_size) + " points");
    }
  };
  check_side(Side::s);
  check_side(Side::t);

  return raw;
}

}  // namespace linematch
