#pragma once

// Partition of the merged point line into maximal alternating same-side
// blocks, plus the predecessor-boundary lookup used by the solver sweeps.

#include <optional>
#include <string>
#include <vector>

#include "linematch/error.hpp"
#include "linematch/instance.hpp"

namespace linematch {

struct PointRef {
  Side side;
  int index;  // index into the instance's side arrays

  friend bool operator==(const PointRef& a, const PointRef& b) {
    return a.side == b.side && a.index == b.index;
  }
};

struct Block {
  Side side;
  std::vector<int> points;  // per-side indices, ascending coordinate
};

struct BlockPartition {
  std::vector<Block> blocks;
};

// Splits the merged, sorted line into maximal alternating runs. The instance
// must be normalized (validate_instance) and non-empty.
template <class Coord>
BlockPartition partition(const BasicInstance<Coord>& inst) {
  if (inst.total_size() == 0) fail(ErrorKind::EmptyInstance, "no points to partition");

  BlockPartition part;
  int i = 0, j = 0;
  const int y = inst.s_size(), z = inst.t_size();
  while (i < y || j < z) {
    bool take_s = j >= z || (i < y && inst.s_coords[i] < inst.t_coords[j]);
    Side sd = take_s ? Side::s : Side::t;
    if (part.blocks.empty() || part.blocks.back().side != sd)
      part.blocks.push_back({sd, {}});
    part.blocks.back().points.push_back(take_s ? i++ : j++);
  }
  return part;
}

// Largest point of block w-1; the convention only exists for w > 0.
inline std::optional<PointRef> boundary_point(const BlockPartition& part, int w) {
  if (w < 0 || w >= static_cast<int>(part.blocks.size()))
    fail(ErrorKind::IndexOutOfRange, "block index " + std::to_string(w) + " out of range");
  if (w == 0) return std::nullopt;
  const Block& prev = part.blocks[static_cast<std::size_t>(w) - 1];
  return PointRef{prev.side, prev.points.back()};
}

}  // namespace linematch
