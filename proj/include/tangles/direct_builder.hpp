#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <vector>

#include "tangles/cross_set.hpp"
#include "tangles/errors.hpp"
#include "tangles/permutation.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

struct DirectResult {
  std::optional<Tangle> tangle;
  // Positions of a 321 witness when the permutation has no direct tangle.
  std::array<int, 3> witness{0, 0, 0};

  bool ok() const { return tangle.has_value(); }
};

namespace detail {

inline int leftmost_descent(const Permutation& p) {
  for (int s = 1; s <= p.size() - 1; ++s)
    if (p(s) > p(s + 1)) return s;
  return 0;
}

// One induction step: put a cross at position s above `cs` (which solves the
// permutation `below`) and compact. With a split at s the two independent
// halves shift toward the cross separately; otherwise the whole sub-tangle
// shifts until the swaps flanking the cross touch it on both sides at once.
inline void place_cross_direct(HeightedCrossSet& cs, const Permutation& below, int s) {
  const int top = cs.empty() ? 0 : cs.max_height() + 1;
  HeightedCrossSet base;
  base.add({s, top});
  if (has_split(below, s)) {
    auto [lo, hi] = cs.split_at(s);
    lo.shift(touch_shift(base, lo));
    hi.shift(touch_shift(base, hi));
    cs = base;
    cs.merge(lo);
    cs.merge(hi);
  } else {
    HeightedCrossSet sub = cs;
    sub.shift(touch_shift(base, sub));
    // Provable geometry of the no-split case: the flanking topmost swaps end
    // up level with each other one unit below the cross, with the topmost
    // swap under the cross one unit lower still.
    assert(sub.topmost_at(s - 1) == top - 1);
    assert(sub.topmost_at(s + 1) == top - 1);
    assert(sub.topmost_at(s) == top - 2);
    cs = base;
    cs.merge(sub);
  }
}

}  // namespace detail

// Builds a direct tangle (every path has at most 2 corners) for a
// 321-avoiding permutation, peeling one inversion at a time at the leftmost
// descent. A top_descent override picks the first peel position; the
// remaining levels always use the leftmost descent.
inline DirectResult build_direct(const Permutation& p,
                                 std::optional<int> top_descent = std::nullopt) {
  if (auto w = find_321(p)) return {std::nullopt, *w};

  std::vector<int> peels;
  Permutation cur = p;
  bool first = true;
  while (!cur.is_identity()) {
    int s;
    if (first && top_descent) {
      s = *top_descent;
      if (s < 1 || s > cur.size() - 1 || cur(s) <= cur(s + 1))
        throw PositionOutOfRange("top_descent " + std::to_string(s) + " is not a descent");
    } else {
      s = detail::leftmost_descent(cur);
    }
    first = false;
    peels.push_back(s);
    cur = apply_swap(cur, s);
  }

  HeightedCrossSet cs;
  Permutation below = std::move(cur);  // identity
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    detail::place_cross_direct(cs, below, *it);
    below = apply_swap(below, *it);
  }
  require_invariant(below == p, "peel/assembly mismatch");

  Tangle t = cs.to_tangle(p);
  ensure_valid(t);
  require_invariant(solves(t, p), "direct tangle must solve its permutation");
  require_invariant(is_direct(t) && is_simple(t), "built tangle is not direct");
  const auto cls = classify(p);
  int moved = 0;
  for (int v = 1; v <= p.size(); ++v)
    if (cls[static_cast<std::size_t>(v)] != ElementClass::neither) ++moved;
  require_invariant(corner_count(t).total == 2 * moved,
                    "direct tangle corner total must be twice the moved-element count");
  return {std::move(t), {0, 0, 0}};
}

}  // namespace tangles
