#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "tangles/cross_set.hpp"
#include "tangles/errors.hpp"
#include "tangles/marking.hpp"
#include "tangles/permutation.hpp"
#include "tangles/recognizer.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

// Route bookkeeping for one induction step. a = pi(s) starts its route
// rightward, b = pi(s+1) leftward, and alignment guarantees (a, b) is an
// inversion, so the step peels exactly one crossing.
enum class PlacementCase { split, equal_heights, marking_changed };

struct BuildFrame {
  Permutation pi;
  Marking marking;
  int s = 0;
  int a = 0, b = 0;
  PlacementCase placement = PlacementCase::split;
  bool a_changed = false, b_changed = false;  // route changed going to pi'
};

// Reclassification of the two swapped elements against pi' = pi * sigma(s).
// Straight and untouched routes are forced; a switchback keeps the route
// compatible with the crossing just drawn: RL for the right-mover a, LR for
// the left-mover b.
inline Marking marking_update(const Permutation& p, const Marking& m, int s) {
  if (s < 1 || s > p.size() - 1)
    throw PositionOutOfRange("swap position " + std::to_string(s) + " outside 1.." +
                             std::to_string(p.size() - 1));
  const int a = p(s), b = p(s + 1);
  if (!is_marking_for(p, m)) throw NotAMarkingFor("marking does not fit the permutation");
  if (!starts_r(m[static_cast<std::size_t>(a)]) || !starts_l(m[static_cast<std::size_t>(b)]) ||
      a < b)
    throw Error("marking_update requires routes R..., L... across an inversion at s");
  const Permutation next = apply_swap(p, s);
  const auto cls = classify(next);
  Marking out = m;
  const auto reclass = [&](int v, Mark switchback_route) {
    switch (cls[static_cast<std::size_t>(v)]) {
      case ElementClass::switchback: return switchback_route;
      case ElementClass::right_straight: return Mark::r;
      case ElementClass::left_straight: return Mark::l;
      case ElementClass::neither: return Mark::none;
    }
    return Mark::none;
  };
  out[static_cast<std::size_t>(a)] = reclass(a, Mark::rl);
  out[static_cast<std::size_t>(b)] = reclass(b, Mark::lr);
  return out;
}

inline BuildFrame make_build_frame(const Permutation& pi, const Marking& m, int s) {
  BuildFrame frame{pi, m, s, pi(s), pi(s + 1), PlacementCase::split, false, false};
  const Marking next = marking_update(pi, m, s);
  frame.a_changed = next[static_cast<std::size_t>(frame.a)] != m[static_cast<std::size_t>(frame.a)];
  frame.b_changed = next[static_cast<std::size_t>(frame.b)] != m[static_cast<std::size_t>(frame.b)];
  if (has_split(apply_swap(pi, s), s))
    frame.placement = PlacementCase::split;
  else if (!frame.a_changed && !frame.b_changed)
    frame.placement = PlacementCase::equal_heights;
  else
    frame.placement = PlacementCase::marking_changed;
  return frame;
}

namespace detail {

// Places the new cross above the sub-drawing per the frame's case analysis.
inline void place_cross_perfect(HeightedCrossSet& cs, const BuildFrame& frame) {
  const int s = frame.s;
  const int top = cs.empty() ? 0 : cs.max_height() + 1;
  HeightedCrossSet base;
  base.add({s, top});
  switch (frame.placement) {
    case PlacementCase::split: {
      auto [lo, hi] = cs.split_at(s);
      lo.shift(touch_shift(base, lo));
      hi.shift(touch_shift(base, hi));
      cs = base;
      cs.merge(lo);
      cs.merge(hi);
      return;
    }
    case PlacementCase::equal_heights: {
      // a sits at position s+1 of `below` and moves right first, so its
      // topmost swap is the topmost one in column s+1; b mirrors in column
      // s-1. Those two heights are provably equal here.
      const int ha = cs.topmost_at(s + 1);
      const int hb = cs.topmost_at(s - 1);
      const int hs = cs.topmost_at(s);
      require_invariant(hs != HeightedCrossSet::no_swap,
                        "no-split step must see a swap under the cross");
      require_invariant(ha != HeightedCrossSet::no_swap && ha == hb,
                        "topmost swaps of the swapped elements must be level");
      require_invariant(ha > hs, "flanking swaps must sit above the boundary-column swap");
      HeightedCrossSet sub = cs;
      sub.shift(touch_shift(base, sub));
      assert(sub.topmost_at(s + 1) == top - 1 && sub.topmost_at(s - 1) == top - 1);
      cs = base;
      cs.merge(sub);
      return;
    }
    case PlacementCase::marking_changed: {
      require_invariant(frame.a_changed != frame.b_changed,
                        "exactly one route may change outside a split");
      // The element whose route survives fuses with its first swap below:
      // the cross goes immediately above the topmost swap of b (a changed)
      // or of a (b changed).
      const int survivor_col = frame.a_changed ? s - 1 : s + 1;
      const int target = cs.topmost_at(survivor_col);
      require_invariant(target != HeightedCrossSet::no_swap,
                        "surviving route must move in the sub-drawing");
      require_invariant(target > cs.topmost_at(s),
                        "surviving route's first swap must precede the boundary-column swap");
      HeightedCrossSet sub = cs;
      sub.shift((top - 1) - target);
      cs = base;
      cs.merge(sub);
      return;
    }
  }
}

inline int select_route_descent(const Permutation& p, const Marking& m) {
  for (int s = 1; s <= p.size() - 1; ++s)
    if (starts_r(m[static_cast<std::size_t>(p(s))]) &&
        starts_l(m[static_cast<std::size_t>(p(s + 1))]))
      return s;
  return 0;
}

}  // namespace detail

// Places the frame's cross above a perfect tangle for pi * sigma(s), giving
// a tangle for pi.
inline Tangle place_top_cross(const Tangle& t_sub, const BuildFrame& frame) {
  ensure_valid(t_sub);
  const Permutation below = apply_swap(frame.pi, frame.s);
  require_invariant(solves(t_sub, below), "sub-tangle must solve pi * sigma(s)");
  HeightedCrossSet cs;
  const auto& rows = t_sub.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int pos : rows[r])
      cs.add({pos, static_cast<int>(rows.size() - 1 - r)});
  detail::place_cross_perfect(cs, frame);
  Tangle out = cs.to_tangle(frame.pi);
  ensure_valid(out);
  return out;
}

struct PerfectResult {
  std::optional<Tangle> tangle;
  Marking marking;  // the aligned balanced marking realized by the tangle
  bool perfect = false;
  NotPerfectReason reason = NotPerfectReason::irregular_conflict;
  std::vector<int> obstruction;

  bool ok() const { return perfect; }
};

// Recognize, align the marking, then peel crossings top-down and reassemble
// bottom-up. Each step takes the leftmost position whose adjacent routes
// read R..., L...; alignment keeps that pair an inversion, and the
// construction's per-step invariants are checked as the drawing grows.
inline PerfectResult build_perfect(const Permutation& p) {
  RecognizeResult rec = recognize(p);
  if (!rec.perfect) return {std::nullopt, {}, false, rec.reason, std::move(rec.obstruction)};
  const Marking aligned = align(p, rec.marking);

  std::vector<BuildFrame> frames;
  Permutation cur = p;
  Marking m = aligned;
  while (!cur.is_identity()) {
    const int s = detail::select_route_descent(cur, m);
    require_invariant(s != 0, "aligned marking must expose a route descent");
    require_invariant(cur(s) > cur(s + 1), "route descent must be an inversion");
    BuildFrame frame = make_build_frame(cur, m, s);
    Marking next = marking_update(cur, m, s);
    cur = apply_swap(cur, s);
#ifndef NDEBUG
    if (p.size() <= 7) {
      assert(is_marking_for(cur, next));
      assert(is_balanced(cur, next, BalanceMode::full));
      assert(is_aligned(cur, next));
    }
#endif
    m = std::move(next);
    frames.push_back(std::move(frame));
  }

  HeightedCrossSet cs;
  Permutation below = std::move(cur);  // identity
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    detail::place_cross_perfect(cs, *it);
    below = apply_swap(below, it->s);
    require_invariant(below == it->pi, "peel/assembly mismatch");
  }

  Tangle t = cs.to_tangle(p);
  ensure_valid(t);
  require_invariant(solves(t, p), "perfect tangle must solve its permutation");
  require_invariant(is_perfect(t), "built tangle is not perfect");
  const auto drawn = marking_of(t);
  const auto corners = corner_count(t);
  for (int v = 1; v <= p.size(); ++v) {
    require_invariant(drawn[static_cast<std::size_t>(v)] ==
                          to_string(aligned[static_cast<std::size_t>(v)]),
                      "drawn routes must realize the aligned marking");
    require_invariant(corners.per_path[static_cast<std::size_t>(v)] ==
                          2 * static_cast<int>(drawn[static_cast<std::size_t>(v)].size()),
                      "per-path corners must be twice the route length");
  }
  return {std::move(t), aligned, true, NotPerfectReason::irregular_conflict, {}};
}

}  // namespace tangles
