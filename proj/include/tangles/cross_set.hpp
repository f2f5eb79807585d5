#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "tangles/errors.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

// Builder-internal drawing: crosses at integer (position, height) with height
// increasing upward, so larger heights come earlier in the row order. Two
// crosses at the same height must sit at column distance >= 2.
struct Cross {
  int position = 0;
  int height = 0;
};

class HeightedCrossSet {
 public:
  // Sentinel for "no swap in this column" when querying topmost heights.
  static constexpr int no_swap = std::numeric_limits<int>::min();

  HeightedCrossSet() = default;
  explicit HeightedCrossSet(std::vector<Cross> crosses) : crosses_(std::move(crosses)) {}

  bool empty() const { return crosses_.empty(); }
  std::size_t size() const { return crosses_.size(); }
  const std::vector<Cross>& crosses() const { return crosses_; }

  void add(Cross c) { crosses_.push_back(c); }

  void shift(int delta) {
    for (auto& c : crosses_) c.height += delta;
  }

  void merge(const HeightedCrossSet& other) {
    crosses_.insert(crosses_.end(), other.crosses_.begin(), other.crosses_.end());
  }

  int max_height() const {
    int h = no_swap;
    for (const auto& c : crosses_) h = std::max(h, c.height);
    return h;
  }

  // Height of the topmost cross in the given column, or no_swap.
  int topmost_at(int position) const {
    int h = no_swap;
    for (const auto& c : crosses_)
      if (c.position == position) h = std::max(h, c.height);
    return h;
  }

  // Topmost height over a column range [lo, hi].
  int topmost_in(int lo, int hi) const {
    int h = no_swap;
    for (const auto& c : crosses_)
      if (c.position >= lo && c.position <= hi) h = std::max(h, c.height);
    return h;
  }

  // Partition into columns < s and columns > s. Columns == s must not occur.
  std::pair<HeightedCrossSet, HeightedCrossSet> split_at(int s) const {
    HeightedCrossSet lo, hi;
    for (const auto& c : crosses_) {
      require_invariant(c.position != s, "split boundary column holds a cross");
      (c.position < s ? lo : hi).add(c);
    }
    return {std::move(lo), std::move(hi)};
  }

  // Materializes one row per integer height from the top cross down to the
  // bottom one (gaps become interior empty rows), plus the two empty boundary
  // rows.
  Tangle to_tangle(const Permutation& start) const {
    std::vector<std::vector<int>> rows;
    if (crosses_.empty()) {
      rows = {{}, {}};
      return Tangle(start, std::move(rows));
    }
    int hmax = std::numeric_limits<int>::min();
    int hmin = std::numeric_limits<int>::max();
    for (const auto& c : crosses_) {
      hmax = std::max(hmax, c.height);
      hmin = std::min(hmin, c.height);
    }
    rows.assign(static_cast<std::size_t>(hmax - hmin) + 3, {});
    for (const auto& c : crosses_)
      rows[static_cast<std::size_t>(hmax - c.height) + 1].push_back(c.position);
    return Tangle(start, std::move(rows));
  }

 private:
  std::vector<Cross> crosses_;
};

// Maximal upward shift of `sub` toward `base`. Any sub cross within column
// distance 1 of a base cross must stay strictly below it; the topmost such
// pair ends up touching (one height unit apart). With no such pair the sub
// rises until its top row aligns with the base's top row.
// Pre: sub lies strictly below base.
inline int touch_shift(const HeightedCrossSet& base, const HeightedCrossSet& sub) {
  if (base.empty() || sub.empty()) return 0;
  int bound = std::numeric_limits<int>::max();
  for (const auto& b : base.crosses())
    for (const auto& c : sub.crosses())
      if (std::abs(b.position - c.position) <= 1)
        bound = std::min(bound, b.height - 1 - c.height);
  if (bound == std::numeric_limits<int>::max()) bound = base.max_height() - sub.max_height();
  require_invariant(bound >= 0, "touch_shift requires the sub-tangle strictly below the base");
  return bound;
}

inline HeightedCrossSet shift_to_touch(const HeightedCrossSet& base, const HeightedCrossSet& sub) {
  HeightedCrossSet shifted = sub;
  shifted.shift(touch_shift(base, sub));
  HeightedCrossSet out = base;
  out.merge(shifted);
  return out;
}

}  // namespace tangles
