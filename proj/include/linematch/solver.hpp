#pragma once

// Block-sweep solver for minimum-cost many-to-many matching on the line with
// per-point demands and optional capacities.
//
// A sweep walks the alternating block partition left to right and, for each
// point b of the right block of the current block pair, runs three steps:
//   step 1  scans the candidate points left of b (the adjacent supply block
//           for the first point, otherwise the partners of b's predecessor,
//           plus an improvement-only descent through the deeper same-side
//           blocks) and adds the pair (p, b) when p still needs partners, or
//           trades a releasable pair at either endpoint for (p, b) when that
//           lowers the total cost;
//   step 2  while b still needs partners, reuses surplus: it moves pairs away
//           from earlier same-block points whose degree exceeds their demand
//           (the per-block surplus list), then matches b to surplus partners
//           of the highest-degree earlier point (the tempset);
//   step 3  while b still needs partners, walks the same-side supply blocks
//           leftward, scoring candidates (deficient points individually,
//           satisfied points grouped by their count of sweep-smaller partners
//           with only the largest per group competing) and matches b to the
//           candidate with the cheapest net move.
// Steps 2 and 3 compete per acquired partner: the cheapest move wins.
//
// Releasing a pair whose far endpoint is tight is priced recursively: the
// endpoint is re-satisfied by a nearby unmatched point, whose fresh surplus
// may drop its own costliest pair, and so on to a bounded depth. Every move
// the solver applies is a concrete pair chain whose exact cost delta is known
// up front, so each mutation either lowers the total cost or reduces unmet
// demand, and the sweep-to-sweep alternation terminates.
//
// A single left-to-right pass cannot serve demands that need partners to the
// right, so the driver alternates mirrored sweeps until a full sweep changes
// nothing.

#include <algorithm>
#include <cassert>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "linematch/error.hpp"
#include "linematch/feasibility.hpp"
#include "linematch/instance.hpp"
#include "linematch/matching.hpp"

namespace linematch {

struct SweepStats {
  long long sweeps = 0;
  long long step1_adds = 0;
  long long step1_swaps = 0;
  long long step2_calls = 0;
  long long step2_moves = 0;
  long long step2_reuse_adds = 0;
  long long step3_calls = 0;
  long long step3_matches = 0;
  long long removed_pairs = 0;
};

template <class Coord>
class SweepSolver {
 public:
  struct Options {
    bool record_cost_rows = false;
    int max_sweeps = 4096;
    // Recursion bound for release pricing; 0 picks a size-based default
    // (deeper search on small instances, where long rewire chains matter
    // and the work is cheap).
    int chain_depth = 0;
  };

  static constexpr int kLongPairProbe = 24;

  struct SweepBlock {
    Side side;
    std::vector<int> pts;  // merged ids in sweep order
  };

  struct ChainOp {
    bool add;
    int x, y;
  };

  // A rewire with its exact signed cost contribution. Ops are only
  // materialized for the chain that actually fires; the evaluation passes
  // carry values alone. `absorbed` records that the chain ends by dropping a
  // pair on the move's other endpoint.
  struct Priced {
    bool ok = false;
    bool absorbed = false;
    Coord value = Coord(0);  // credit of a release, net cost of a resatisfy
    std::vector<ChainOp> ops;
  };

  SweepSolver(const BasicInstance<Coord>& inst, MatchMode mode, Options opt = {})
      : mode_(mode), capacitated_(mode == MatchMode::demand_and_capacity), opt_(opt) {
    const int y = inst.s_size(), z = inst.t_size();
    n_ = y + z;
    coord_.reserve(n_);
    side_.reserve(n_);
    demand_.reserve(n_);
    cap_.reserve(n_);
    ref_.reserve(n_);
    int i = 0, j = 0;
    while (i < y || j < z) {
      bool take_s = j >= z || (i < y && inst.s_coords[i] < inst.t_coords[j]);
      if (take_s) {
        coord_.push_back(inst.s_coords[i]);
        side_.push_back(Side::s);
        demand_.push_back(inst.s_demands[i]);
        cap_.push_back(capacitated_ ? inst.effective_cap(Side::s, i) : z);
        ref_.push_back(i);
        s_merged_.push_back(static_cast<int>(coord_.size()) - 1);
        ++i;
      } else {
        coord_.push_back(inst.t_coords[j]);
        side_.push_back(Side::t);
        demand_.push_back(inst.t_demands[j]);
        cap_.push_back(capacitated_ ? inst.effective_cap(Side::t, j) : y);
        ref_.push_back(j);
        t_merged_.push_back(static_cast<int>(coord_.size()) - 1);
        ++j;
      }
    }
    partners_.assign(n_, {});
    deg_.assign(n_, 0);
    deficit_ = 0;
    for (int d : demand_) deficit_ += d;
    range_ = n_ > 0 ? coord_.back() - coord_.front() : Coord(0);
    if (opt_.chain_depth <= 0) opt_.chain_depth = n_ <= 64 ? 4 : 3;
    depth_ = opt_.chain_depth;
  }

  BasicMatching<Coord> solve() {
    if (n_ == 0) return {};
    // Escalating chain depth: cheap sweeps do the bulk of the work, the
    // expensive deep pricing only runs over nearly converged states.
    int sweeps = 0;
    bool mirrored = false;
    for (depth_ = std::min(1, opt_.chain_depth);; ++depth_) {
      int unchanged = 0;
      for (;;) {
        if (sweeps++ >= opt_.max_sweeps)
          fail(ErrorKind::InternalNontermination, diagnostic("sweep limit reached"));
        bool ch = run_sweep(mirrored);
        ++stats_.sweeps;
        unchanged = ch ? 0 : unchanged + 1;
        mirrored = !mirrored;
        if (unchanged >= 2) break;
      }
      if (depth_ >= opt_.chain_depth) break;
    }
    if (deficit_ > 0)
      fail(ErrorKind::InternalNontermination, diagnostic("unmet demands after convergence"));
    return current_matching();
  }

  // --- sweep machinery (public so the step behaviour is directly testable) ---

  void begin_sweep(bool mirrored) {
    mirrored_ = mirrored;
    blocks_.clear();
    for (int k = 0; k < n_; ++k) {
      int p = mirrored ? n_ - 1 - k : k;
      if (blocks_.empty() || blocks_.back().side != side_[p]) blocks_.push_back({side_[p], {}});
      blocks_.back().pts.push_back(p);
    }
    supply_prefix_.assign(blocks_.size(), 0);
    for (std::size_t w = 0; w < blocks_.size(); ++w)
      supply_prefix_[w] = static_cast<long long>(blocks_[w].pts.size()) +
                          (w >= 2 ? supply_prefix_[w - 2] : 0);
    surplus_.assign(blocks_.size(), {});
    rows_deltas_.assign(n_, {});
    row_base_.assign(n_, Coord(0));
    acct_ = Coord(0);
    tempset_.clear();
    changed_ = false;
  }

  bool run_sweep(bool mirrored) {
    begin_sweep(mirrored);
    for (int w = 0; w + 1 < static_cast<int>(blocks_.size()); ++w)
      for (int i = 0; i < static_cast<int>(blocks_[w + 1].pts.size()); ++i) process_point(w, i);
    drop_removable_pairs();
    return changed_;
  }

  void process_point(int w, int i) {
    int b = blocks_[w + 1].pts[i];
    step1(w, i);
    if (deg_[b] > demand_[b]) {
      surplus_[w + 1].push_back(b);
      return;
    }
    if (deg_[b] < demand_[b]) acquire_remaining(w, i);
  }

  void step1(int w, int i) {
    const auto& bs = blocks_[w + 1].pts;
    int b = bs[i];
    scratch_.clear();
    int descent_from = w - 2;
    if (i == 0) {
      const auto& sup = blocks_[w].pts;
      scratch_.assign(sup.rbegin(), sup.rend());
      for (int p : scratch_) try_improve(p, b, /*allow_add=*/true);
    } else {
      int prev = bs[i - 1];
      collect_partners_before_desc(prev, scratch_);
      for (int p : scratch_) try_improve(p, b, /*allow_add=*/true);
      descent_from = w;  // the adjacent block was not fully scanned
    }
    // Improvement-only descent through the remaining same-side blocks, so a
    // sweep can still trade pairs whose partners sit far away (this also
    // covers the points a capacity-saturated predecessor never reached). A
    // candidate can only pay for a trade out of its own pairs or b's, so the
    // scan stops once the remaining points are too far for that, with the
    // holders of the few longest pairs probed separately.
    Coord reach = max_pair_cost(b) + long_pair_threshold();
    for (int wd = descent_from; wd >= 0; wd -= 2) {
      const auto& blk = blocks_[wd].pts;
      if (dist(blk.back(), b) > reach) break;
      for (int k = static_cast<int>(blk.size()) - 1; k >= 0; --k)
        try_improve(blk[k], b, /*allow_add=*/false);
      reach = std::max(reach, max_pair_cost(b) + long_pair_threshold());
    }
    // Snapshot: try_improve rewires pairs while we look at them.
    long_pair_scratch_.clear();
    int probed = 0;
    for (auto it = pairs_by_cost_.rbegin(); it != pairs_by_cost_.rend() && probed < kLongPairProbe;
         ++it, ++probed) {
      int cand = side_[std::get<1>(*it)] == side_[b] ? std::get<2>(*it) : std::get<1>(*it);
      if (before(cand, b)) long_pair_scratch_.push_back(cand);
    }
    for (int cand : long_pair_scratch_) try_improve(cand, b, /*allow_add=*/false);
  }

  // One step-1 evaluation of candidate p for b: points that still need
  // partners get the pair outright; otherwise the pair is taken only when a
  // release on one endpoint (or a disjoint release on each) more than pays
  // for it.
  void try_improve(int p, int b, bool allow_add) {
    if (has_pair(p, b)) return;
    if (deg_[p] < demand_[p]) {
      if (allow_add && deg_[b] < cap_[b]) {
        add_pair(p, b);
        ++stats_.step1_adds;
        record_row(b, dist(p, b));
      }
      return;
    }
    Coord cost = dist(p, b);
    // Quick reject: even releasing the longest held pair at both endpoints
    // cannot pay for the trade.
    if (max_pair_cost(p) + max_pair_cost(b) <= cost) return;
    bool p_full = deg_[p] >= cap_[p];
    bool b_full = deg_[b] >= cap_[b];
    // A release at one endpoint leaves the other endpoint one pair heavier,
    // so the other endpoint needs room -- unless the chain itself ends by
    // dropping a pair there.
    Priced rel_p = best_release(p, b, /*other_absorbs=*/true);
    if (b_full && rel_p.ok && !rel_p.absorbed) rel_p = Priced{};
    Priced rel_b = best_release(b, p, /*other_absorbs=*/true);
    if (p_full && rel_b.ok && !rel_b.absorbed) rel_b = Priced{};
    bool at_p = rel_p.ok && (!rel_b.ok || rel_p.value >= rel_b.value);
    const Priced& rel = at_p ? rel_p : rel_b;
    if (rel.ok && rel.value > cost) {
      Priced full = at_p ? best_release(p, b, true, true, /*with_ops=*/true)
                         : best_release(b, p, true, true, /*with_ops=*/true);
      add_pair(p, b);
      apply_chain(full.ops);
      ++stats_.step1_swaps;
      record_row(b, cost - full.value);
      return;
    }
    // Both endpoints release at once (mandatory when both are at capacity);
    // the two chains must not share a point. Either chain may cost money on
    // its own as long as the pair of them pays for the trade.
    Priced dp = best_release(p, b, /*other_absorbs=*/false, /*improving_only=*/false);
    if (!dp.ok) return;
    Priced db = best_release(b, p, /*other_absorbs=*/false, /*improving_only=*/false);
    if (db.ok && dp.value + db.value > cost) {
      dp = best_release(p, b, false, false, /*with_ops=*/true);
      db = best_release(b, p, false, false, /*with_ops=*/true);
      if (!chains_disjoint(dp.ops, db.ops)) return;
      add_pair(p, b);
      apply_chain(dp.ops);
      apply_chain(db.ops);
      ++stats_.step1_swaps;
      record_row(b, cost - dp.value - db.value);
    }
  }

  // Satisfies b's remaining demand one partner at a time, always applying the
  // cheapest move offered by the step-2 sources (same-block surplus steal,
  // then surplus-partner reuse) and the step-3 deep scan. Running the sources
  // in strict sequence instead is measurably suboptimal: an earlier point's
  // partner choice may have been forced by availability, so the reuse rule's
  // "still the best partner" premise does not survive contact with the deep
  // candidates.
  void acquire_remaining(int w, int i) {
    int b = blocks_[w + 1].pts[i];
    // Candidate-count gate on the same-side supply blocks; the deep scan runs
    // regardless, since it reports its own exhaustion.
    const bool step2_allowed = supply_prefix_[w] >= demand_[b];
    bool counted2 = false, counted3 = false;
    int wp = w;
    while (deg_[b] < demand_[b]) {
      Move mv{};
      if (step2_allowed) {
        mv = probe_surplus_move(w, b);
        if (mv.kind == Move::none) mv = probe_reuse_move(w, i, b);
      }
      Move deep = probe_deep_move(b, wp);
      if (deep.kind != Move::none && (mv.kind == Move::none || deep.delta < mv.delta)) mv = deep;
      if (mv.kind == Move::none) return;  // exhausted; the mirrored sweep continues
      if (mv.kind == Move::deep) {
        if (!counted3) {
          ++stats_.step3_calls;
          counted3 = true;
        }
      } else if (!counted2) {
        ++stats_.step2_calls;
        counted2 = true;
      }
      apply_move(mv, b);
    }
  }

  // A single acquisition move for a deficient b-side point.
  struct Move {
    enum Kind { none, steal, reuse, deep };
    Kind kind = none;
    int partner = -1;  // point that ends up paired with b
    int from = -1;     // steal: surplus same-block point losing the pair
    Priced rel;        // deep: release performed at `partner`
    Coord delta = Coord(0);
  };

  // Step 2 run in the strict order the sweep describes: exhaust the surplus
  // list, then the reuse set.
  void step2(int w, int i) {
    int b = blocks_[w + 1].pts[i];
    ++stats_.step2_calls;
    while (deg_[b] < demand_[b]) {
      Move mv = probe_surplus_move(w, b);
      if (mv.kind == Move::none) break;
      apply_move(mv, b);
    }
    while (deg_[b] < demand_[b]) {
      Move mv = probe_reuse_move(w, i, b);
      if (mv.kind == Move::none) break;
      apply_move(mv, b);
    }
  }

  void step3(int w, int i) {
    int b = blocks_[w + 1].pts[i];
    ++stats_.step3_calls;
    int wp = w;
    while (deg_[b] < demand_[b]) {
      Move mv = probe_deep_move(b, wp);
      if (mv.kind == Move::none) return;  // exhausted; the mirrored sweep continues
      apply_move(mv, b);
    }
  }

  // Move away the smallest transferable partner of the most recent surplus
  // point of b's block. Handing a pair from b_j to b costs exactly b - b_j.
  Move probe_surplus_move(int w, int b) {
    Move mv;
    auto& ll = surplus_[w + 1];
    for (std::size_t idx = ll.size(); idx > 0; --idx) {
      int bj = ll[idx - 1];
      if (deg_[bj] <= demand_[bj]) {  // stale entry
        ll.erase(ll.begin() + static_cast<long>(idx) - 1);
        continue;
      }
      int au = movable_partner(bj, b);
      if (au < 0) continue;
      mv.kind = Move::steal;
      mv.partner = au;
      mv.from = bj;
      mv.delta = dist(au, b) - dist(au, bj);
      return mv;
    }
    return mv;
  }

  // Largest surplus partner of the highest-degree earlier point of b's block
  // (degree ties go to the later point). Such a partner lowered the cost
  // before and is free to take another pair.
  Move probe_reuse_move(int w, int i, int b) {
    Move mv;
    if (i == 0 || deg_[b] >= cap_[b]) return mv;
    int jp = -1;
    for (int k = 0; k < i; ++k) {
      int cand = blocks_[w + 1].pts[k];
      if (jp < 0 || deg_[cand] >= deg_[jp]) jp = cand;
    }
    tempset_.clear();
    collect_surplus_partners_desc(jp, b, tempset_);
    for (int a : tempset_) {
      if (has_pair(a, b)) continue;
      mv.kind = Move::reuse;
      mv.partner = a;
      mv.delta = dist(a, b);
      return mv;
    }
    return mv;
  }

  // Scored scan of the same-side supply blocks, nearest block first. Points
  // that still need partners compete individually (matching them serves two
  // demands, so their score carries a credit for the slot they would
  // otherwise fill elsewhere); satisfied points are grouped by their count of
  // sweep-smaller partners and only the largest point of each group competes,
  // with a credit for the best release it can afford. The scan descends two
  // blocks only when the current block offers no candidate.
  Move probe_deep_move(int b, int& wp) {
    Move mv;
    while (wp >= 0) {
      const auto& blk = blocks_[wp].pts;
      int best = -1;
      Priced best_rel;
      Coord best_score = Coord(0);
      seen_u_.clear();
      bool spare_seen = false;
      for (int k = static_cast<int>(blk.size()) - 1; k >= 0; --k) {
        int p = blk[k];
        if (has_pair(p, b)) continue;
        Coord score;
        Priced rel;
        if (deg_[p] < demand_[p]) {
          int alt = cheapest_new_partner(p, b, -1);
          score = alt >= 0 ? dist(p, b) - dist(p, alt) : -(range_ + 1);
        } else {
          int u = left_count(p);
          bool rep = std::find(seen_u_.begin(), seen_u_.end(), u) == seen_u_.end();
          bool spare = capacitated_ && !spare_seen && deg_[p] < cap_[p];
          if (!rep && !spare) continue;
          bool need_release = deg_[p] >= cap_[p];
          rel = best_release(p, b, /*other_absorbs=*/false, /*improving_only=*/!need_release);
          // A candidate with no way to make room is dead; it must not shadow
          // the smaller points of its group.
          if (need_release && !rel.ok) continue;
          if (rep) seen_u_.push_back(u);
          if (spare) spare_seen = true;
          score = dist(p, b) - (rel.ok ? rel.value : Coord(0));
        }
        if (best < 0 || score < best_score) {
          best = p;
          best_rel = std::move(rel);
          best_score = score;
        }
      }
      if (best >= 0) {
        mv.kind = Move::deep;
        mv.partner = best;
        if (best_rel.ok) {
          bool need = deg_[best] >= cap_[best];
          best_rel = best_release(best, b, false, !need, /*with_ops=*/true);
        }
        mv.rel = std::move(best_rel);
        mv.delta = best_score;
        return mv;
      }
      wp -= 2;
    }
    return mv;
  }

  void apply_move(const Move& mv, int b) {
    switch (mv.kind) {
      case Move::steal:
        add_pair(mv.partner, b);
        remove_pair(mv.partner, mv.from);
        ++stats_.step2_moves;
        break;
      case Move::reuse:
        add_pair(mv.partner, b);
        ++stats_.step2_reuse_adds;
        break;
      case Move::deep:
        add_pair(mv.partner, b);
        if (mv.rel.ok) apply_chain(mv.rel.ops);
        ++stats_.step3_matches;
        break;
      case Move::none:
        assert(false);
        break;
    }
    record_row(b, mv.delta);
  }

  // Drops every pair whose two endpoints both exceed their demands, costliest
  // first; an optimal matching keeps no such pair.
  void drop_removable_pairs() {
    struct Cand {
      Coord cost;
      int p, q;
    };
    std::vector<Cand> cands;
    for (int p = 0; p < n_; ++p) {
      if (side_[p] != Side::s || deg_[p] <= demand_[p]) continue;
      for (int q : partners_[p])
        if (deg_[q] > demand_[q]) cands.push_back({dist(p, q), p, q});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.cost != b.cost) return a.cost > b.cost;
      if (a.p != b.p) return a.p < b.p;
      return a.q < b.q;
    });
    for (const auto& c : cands) {
      if (deg_[c.p] > demand_[c.p] && deg_[c.q] > demand_[c.q]) {
        remove_pair(c.p, c.q);
        ++stats_.removed_pairs;
      }
    }
  }

  // --- release pricing ---

  // Best chain that frees one degree at `anchor` while keeping every other
  // point feasible: drop a surplus partner outright, or drop a tight partner
  // and re-satisfy it recursively. `other` is the incoming partner of the
  // move under evaluation; when other_absorbs is set the chain may finish by
  // dropping a pair on `other` itself, netting against the pair it gains.
  // improving_only keeps positive credits; otherwise any-valued chains count
  // (needed when a capacity-saturated point must shed a pair regardless).
  Priced best_release(int anchor, int other, bool other_absorbs, bool improving_only = true,
                      bool with_ops = false) const {
    Priced best;
    used_.clear();
    used_.push_back(anchor);
    used_.push_back(other);
    for (int x : partners_[anchor]) {
      if (x == other) continue;
      Priced cand;
      if (deg_[x] > demand_[x]) {
        cand.ok = true;
        cand.value = dist(anchor, x);
        if (with_ops) cand.ops = {{false, anchor, x}};
      } else if (deg_[x] == demand_[x] && depth_ > 0) {
        used_.push_back(x);
        Priced rs = price_resatisfy(x, other, other_absorbs, depth_ - 1, with_ops);
        used_.pop_back();
        if (!rs.ok) continue;
        cand.ok = true;
        cand.absorbed = rs.absorbed;
        cand.value = dist(anchor, x) - rs.value;
        if (with_ops) {
          cand.ops = {{false, anchor, x}};
          cand.ops.insert(cand.ops.end(), rs.ops.begin(), rs.ops.end());
        }
      } else {
        continue;
      }
      if (improving_only && cand.value <= 0) continue;
      if (!best.ok || cand.value > best.value) best = std::move(cand);
    }
    return best;
  }

 private:
  // Cheapest way to hand tight point y a substitute partner: nearby unmatched
  // opposite points, each priced minus whatever its fresh surplus can drop.
  // A capacity-saturated substitute is usable only when it nets a drop.
  Priced price_resatisfy(int y, int other, bool other_absorbs, int depth,
                         bool with_ops = false) const {
    static constexpr int kProbe = 2;
    Priced best;
    const auto& lst = side_[y] == Side::s ? t_merged_ : s_merged_;
    auto mid = std::lower_bound(lst.begin(), lst.end(), y);
    auto consider = [&](int r) {
      if (std::find(used_.begin(), used_.end(), r) != used_.end()) return false;
      if (has_pair(y, r)) return false;
      bool must_drop = capacitated_ && deg_[r] >= cap_[r];
      used_.push_back(r);
      Priced drop = price_drop(r, other, other_absorbs, depth, must_drop, with_ops);
      used_.pop_back();
      if (!drop.ok) return false;
      Coord net = dist(y, r) - drop.value;
      if (!best.ok || net < best.value) {
        best.ok = true;
        best.absorbed = drop.absorbed;
        best.value = net;
        if (with_ops) {
          best.ops = {{true, y, r}};
          best.ops.insert(best.ops.end(), drop.ops.begin(), drop.ops.end());
        }
      }
      return true;
    };
    int seen = 0;
    for (auto k = mid; k != lst.begin() && seen < kProbe;) {
      --k;
      if (consider(*k)) ++seen;
    }
    seen = 0;
    for (auto k = mid; k != lst.end() && seen < kProbe; ++k) {
      if (consider(*k)) ++seen;
    }
    return best;
  }

  // Best credit available from dropping one pair at r, which is about to gain
  // a pair. Unless must_drop is set (r is at capacity), zero (no drop) is an
  // option.
  Priced price_drop(int r, int other, bool other_absorbs, int depth, bool must_drop,
                    bool with_ops = false) const {
    Priced best;
    if (!must_drop) {
      best.ok = true;
      best.value = Coord(0);
      if (deg_[r] < demand_[r]) return best;  // the new pair serves r's own demand
    }
    for (int y : partners_[r]) {
      Priced cand;
      if (y == other) {
        // `other` nets this drop against the pair it gains from the move.
        if (!other_absorbs || deg_[y] < demand_[y]) continue;
        cand.ok = true;
        cand.absorbed = true;
        cand.value = dist(r, y);
        if (with_ops) cand.ops = {{false, r, y}};
      } else if (std::find(used_.begin(), used_.end(), y) != used_.end()) {
        continue;
      } else if (deg_[y] > demand_[y]) {
        cand.ok = true;
        cand.value = dist(r, y);
        if (with_ops) cand.ops = {{false, r, y}};
      } else if (deg_[y] == demand_[y] && depth > 0) {
        used_.push_back(y);
        Priced rs = price_resatisfy(y, other, other_absorbs, depth - 1, with_ops);
        used_.pop_back();
        if (!rs.ok) continue;
        cand.ok = true;
        cand.absorbed = rs.absorbed;
        cand.value = dist(r, y) - rs.value;
        if (with_ops) {
          cand.ops = {{false, r, y}};
          cand.ops.insert(cand.ops.end(), rs.ops.begin(), rs.ops.end());
        }
      } else {
        continue;
      }
      if (!best.ok || cand.value > best.value) best = std::move(cand);
    }
    return best;
  }

  static bool chains_disjoint(const std::vector<ChainOp>& a, const std::vector<ChainOp>& b) {
    for (const auto& oa : a)
      for (const auto& ob : b)
        if (oa.x == ob.x || oa.x == ob.y || oa.y == ob.x || oa.y == ob.y) return false;
    return true;
  }


  void apply_chain(const std::vector<ChainOp>& ops) {
    for (const auto& op : ops) {
      if (op.add)
        add_pair(op.x, op.y);
      else
        remove_pair(op.x, op.y);
    }
  }

 public:
  // --- matching state ---

  bool has_pair(int p, int q) const {
    const auto& ps = partners_[p].size() <= partners_[q].size() ? partners_[p] : partners_[q];
    int needle = partners_[p].size() <= partners_[q].size() ? q : p;
    return std::binary_search(ps.begin(), ps.end(), needle);
  }

  void add_pair(int p, int q) {
    assert(p != q && side_[p] != side_[q] && !has_pair(p, q));
    insert_sorted(partners_[p], q);
    insert_sorted(partners_[q], p);
    if (deg_[p] < demand_[p]) --deficit_;
    if (deg_[q] < demand_[q]) --deficit_;
    ++deg_[p];
    ++deg_[q];
    ++pair_count_;
    cost_ += dist(p, q);
    pairs_by_cost_.insert({dist(p, q), std::min(p, q), std::max(p, q)});
    changed_ = true;
  }

  void remove_pair(int p, int q) {
    erase_sorted(partners_[p], q);
    erase_sorted(partners_[q], p);
    --deg_[p];
    --deg_[q];
    if (deg_[p] < demand_[p]) ++deficit_;
    if (deg_[q] < demand_[q]) ++deficit_;
    --pair_count_;
    cost_ -= dist(p, q);
    auto it = pairs_by_cost_.find({dist(p, q), std::min(p, q), std::max(p, q)});
    assert(it != pairs_by_cost_.end());
    pairs_by_cost_.erase(it);
    changed_ = true;
  }

  BasicMatching<Coord> current_matching() const {
    BasicMatching<Coord> m;
    m.pairs.reserve(static_cast<std::size_t>(pair_count_));
    for (int p = 0; p < n_; ++p) {
      if (side_[p] != Side::s) continue;
      for (int q : partners_[p]) {
        m.pairs.emplace_back(ref_[p], ref_[q]);
        m.total_cost += dist(p, q);
      }
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
  }

  // --- introspection ---

  int merged_count() const { return n_; }
  Coord merged_coord(int p) const { return coord_[p]; }
  Side merged_side(int p) const { return side_[p]; }
  int merged_of(Side sd, int index) const {
    return sd == Side::s ? s_merged_[static_cast<std::size_t>(index)]
                         : t_merged_[static_cast<std::size_t>(index)];
  }
  int degree(int p) const { return deg_[p]; }
  int demand_of(int p) const { return demand_[p]; }
  int cap_of(int p) const { return cap_[p]; }
  const std::vector<int>& partners(int p) const { return partners_[p]; }
  long long deficit_total() const { return deficit_; }
  long long pair_count() const { return pair_count_; }
  Coord running_cost() const { return cost_; }
  const std::vector<SweepBlock>& sweep_blocks() const { return blocks_; }
  const std::vector<int>& surplus_list(int w) const {
    return surplus_[static_cast<std::size_t>(w)];
  }
  const std::vector<int>& last_tempset() const { return tempset_; }
  const SweepStats& stats() const { return stats_; }

  // C(q, k) row for a point, rebuilt from the recorded per-slot deltas; index
  // 0 holds the chained base value.
  std::vector<Coord> cost_row(int merged_id) const {
    std::vector<Coord> row{row_base_[static_cast<std::size_t>(merged_id)]};
    Coord acc = row.front();
    for (Coord d : rows_deltas_[static_cast<std::size_t>(merged_id)]) {
      acc += d;
      row.push_back(acc);
    }
    return row;
  }

 private:
  bool before(int a, int b) const { return mirrored_ ? a > b : a < b; }

  Coord dist(int a, int b) const {
    return coord_[a] < coord_[b] ? coord_[b] - coord_[a] : coord_[a] - coord_[b];
  }

  static void insert_sorted(std::vector<int>& v, int x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }

  static void erase_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    assert(it != v.end() && *it == x);
    v.erase(it);
  }

  int left_count(int p) const {
    const auto& ps = partners_[p];
    auto it = std::lower_bound(ps.begin(), ps.end(), p);
    int below = static_cast<int>(it - ps.begin());
    return mirrored_ ? static_cast<int>(ps.size()) - below : below;
  }

  Coord max_pair_cost(int p) const {
    const auto& ps = partners_[p];
    if (ps.empty()) return Coord(0);
    return std::max(dist(p, ps.front()), dist(p, ps.back()));
  }

  // Cost of the K-th longest held pair (0 when fewer pairs are held). Any
  // candidate beyond maxpair(b) + this threshold either cannot pay for a
  // trade or holds one of the K longest pairs, which are probed directly.
  Coord long_pair_threshold() const {
    auto it = pairs_by_cost_.rbegin();
    for (int k = 1; k < kLongPairProbe && it != pairs_by_cost_.rend(); ++k) ++it;
    return it == pairs_by_cost_.rend() ? Coord(0) : std::get<0>(*it);
  }

  void collect_partners_before_desc(int prev, std::vector<int>& out) const {
    const auto& ps = partners_[prev];
    if (!mirrored_) {
      auto it = std::lower_bound(ps.begin(), ps.end(), prev);
      for (auto k = it; k != ps.begin();) {
        --k;
        out.push_back(*k);
      }
    } else {
      for (auto k = std::upper_bound(ps.begin(), ps.end(), prev); k != ps.end(); ++k)
        out.push_back(*k);
    }
  }

  // Smallest (in sweep order) partner of bj that can be handed over to b.
  int movable_partner(int bj, int b) const {
    const auto& ps = partners_[bj];
    if (!mirrored_) {
      for (int a : ps) {
        if (a >= b) break;
        if (!has_pair(a, b)) return a;
      }
    } else {
      for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        if (*it <= b) break;
        if (!has_pair(*it, b)) return *it;
      }
    }
    return -1;
  }

  void collect_surplus_partners_desc(int jp, int b, std::vector<int>& out) const {
    auto eligible = [&](int a) {
      return before(a, b) && deg_[a] > demand_[a] && (!capacitated_ || deg_[a] < cap_[a]);
    };
    const auto& ps = partners_[jp];
    if (!mirrored_) {
      for (auto it = ps.rbegin(); it != ps.rend(); ++it)
        if (eligible(*it)) out.push_back(*it);
    } else {
      for (int a : ps)
        if (eligible(a)) out.push_back(a);
    }
  }

  // Nearest opposite-side point not yet matched to x (skipping the two given
  // points); -1 when every legal partner is taken.
  int cheapest_new_partner(int x, int skip1, int skip2) const {
    const auto& lst = side_[x] == Side::s ? t_merged_ : s_merged_;
    auto mid = std::lower_bound(lst.begin(), lst.end(), x);
    int best = -1;
    Coord best_d = Coord(0);
    auto eligible = [&](int cand) {
      if (cand == skip1 || cand == skip2) return false;
      if (capacitated_ && deg_[cand] >= cap_[cand]) return false;
      return !has_pair(x, cand);
    };
    for (auto k = mid; k != lst.begin();) {
      --k;
      if (!eligible(*k)) continue;
      best = *k;
      best_d = dist(x, *k);
      break;
    }
    for (auto k = mid; k != lst.end(); ++k) {
      if (!eligible(*k)) continue;
      Coord d = dist(x, *k);
      if (best < 0 || d < best_d || (d == best_d && *k < best)) best = *k;
      break;
    }
    return best;
  }

  void record_row(int b, Coord delta) {
    if (!opt_.record_cost_rows) return;
    if (rows_deltas_[static_cast<std::size_t>(b)].empty())
      row_base_[static_cast<std::size_t>(b)] = acct_;
    rows_deltas_[static_cast<std::size_t>(b)].push_back(delta);
    acct_ += delta;
  }

  std::string diagnostic(const std::string& what) const {
    return what + " (n=" + std::to_string(n_) + ", pairs=" + std::to_string(pair_count_) +
           ", unmet=" + std::to_string(deficit_) + ")";
  }

  // problem
  int n_ = 0;
  std::vector<Coord> coord_;
  Coord range_ = Coord(0);
  std::vector<Side> side_;
  std::vector<int> demand_, cap_;
  std::vector<int> ref_;
  std::vector<int> s_merged_, t_merged_;
  MatchMode mode_;
  bool capacitated_;
  Options opt_;
  int depth_;  // current release-pricing depth (escalates during solve)
  // matching state
  std::vector<std::vector<int>> partners_;
  std::vector<int> deg_;
  long long pair_count_ = 0;
  std::set<std::tuple<Coord, int, int>> pairs_by_cost_;
  Coord cost_ = Coord(0);
  long long deficit_ = 0;
  bool changed_ = false;
  // sweep-local
  bool mirrored_ = false;
  std::vector<SweepBlock> blocks_;
  std::vector<long long> supply_prefix_;
  std::vector<std::vector<int>> surplus_;
  std::vector<int> tempset_;
  std::vector<int> scratch_;
  std::vector<int> seen_u_;
  std::vector<int> long_pair_scratch_;
  mutable std::vector<int> used_;  // chain membership during release pricing
  std::vector<std::vector<Coord>> rows_deltas_;
  std::vector<Coord> row_base_;
  Coord acct_ = Coord(0);
  SweepStats stats_;
};

// Full solve driver: alternating sweeps over the block partition until a
// whole sweep leaves the matching unchanged.
template <class Coord>
BasicMatching<Coord> run_main_loop(const BasicInstance<Coord>& inst, MatchMode mode,
                                   SweepStats* stats = nullptr) {
  SweepSolver<Coord> solver(inst, mode);
  BasicMatching<Coord> m = solver.solve();
  if (stats) *stats = solver.stats();
  return m;
}

template <class Coord>
BasicMatching<Coord> solve_ommd(const BasicInstance<Coord>& inst, SweepStats* stats = nullptr) {
  detail::require_demands_fit(inst);
  return run_main_loop(inst, MatchMode::demand_only, stats);
}

template <class Coord>
BasicMatching<Coord> solve_ommdc(const BasicInstance<Coord>& inst, SweepStats* stats = nullptr) {
  detail::require_demands_fit(inst);
  if (!feasibility_flow_check(inst))
    fail(ErrorKind::InfeasibleCapacity,
         "no degree assignment satisfies all demands within the capacities");
  return run_main_loop(inst, MatchMode::demand_and_capacity, stats);
}

}  // namespace linematch
