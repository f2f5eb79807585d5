#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <queue>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tangles/errors.hpp"
#include "tangles/marking.hpp"
#include "tangles/permutation.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

// Exhaustive minimum corner count over every tangle for p (or every simple
// tangle when simple_only). States are (permutation, per-element step
// direction); a transition applies one row of non-overlapping swaps and pays
// the direction-change costs. The mandatory vertical boundary steps are the
// all-vertical start and goal states.
inline int min_corners(const Permutation& p, bool simple_only,
                       std::size_t visited_cap = 50'000'000) {
  const int n = p.size();
  if (n > 6) throw SizeGuard("min_corners search is limited to n <= 6");

  // 0 = vertical, 1 = left, 2 = right; packed 4 bits per entry, 2 per dir.
  const auto encode = [n](const std::vector<int>& perm, const std::vector<int>& dirs) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) key = key << 4 | static_cast<std::uint64_t>(perm[static_cast<std::size_t>(i)]);
    for (int v = 0; v < n; ++v) key = key << 2 | static_cast<std::uint64_t>(dirs[static_cast<std::size_t>(v)]);
    return key;
  };
  const auto decode = [n](std::uint64_t key, std::vector<int>& perm, std::vector<int>& dirs) {
    for (int v = n - 1; v >= 0; --v) {
      dirs[static_cast<std::size_t>(v)] = static_cast<int>(key & 3);
      key >>= 2;
    }
    for (int i = n - 1; i >= 0; --i) {
      perm[static_cast<std::size_t>(i)] = static_cast<int>(key & 15);
      key >>= 4;
    }
  };
  const auto step_cost = [](int a, int b) { return a == b ? 0 : (a != 0 && b != 0) ? 2 : 1; };

  std::vector<std::uint32_t> row_masks;  // swap sets as bitmasks over positions 1..n-1
  const int bits = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask)
    if ((mask & (mask << 1)) == 0) row_masks.push_back(mask);

  std::vector<int> start_dirs(static_cast<std::size_t>(n), 0);
  const std::uint64_t start = encode(p.entries(), start_dirs);
  const std::uint64_t goal = encode(Permutation::identity(n).entries(), start_dirs);

  std::priority_queue<std::pair<int, std::uint64_t>, std::vector<std::pair<int, std::uint64_t>>,
                      std::greater<>>
      frontier;
  std::unordered_map<std::uint64_t, int> dist;
  frontier.emplace(0, start);
  dist[start] = 0;
  std::vector<int> perm(static_cast<std::size_t>(n)), dirs(static_cast<std::size_t>(n));
  std::vector<int> next_perm(static_cast<std::size_t>(n)), next_dirs(static_cast<std::size_t>(n));
  while (!frontier.empty()) {
    const auto [cost, key] = frontier.top();
    frontier.pop();
    if (key == goal) return cost;
    if (dist[key] < cost) continue;
    decode(key, perm, dirs);
    std::uint32_t allowed = 0;
    for (int s = 1; s <= n - 1; ++s)
      if (!simple_only || perm[static_cast<std::size_t>(s) - 1] > perm[static_cast<std::size_t>(s)])
        allowed |= 1u << (s - 1);
    for (std::uint32_t mask : row_masks) {
      if (mask & ~allowed) continue;
      next_perm = perm;
      next_dirs.assign(static_cast<std::size_t>(n), 0);
      for (int s = 1; s <= n - 1; ++s) {
        if (!(mask & (1u << (s - 1)))) continue;
        const int mover_right = next_perm[static_cast<std::size_t>(s) - 1];
        const int mover_left = next_perm[static_cast<std::size_t>(s)];
        next_dirs[static_cast<std::size_t>(mover_right) - 1] = 2;
        next_dirs[static_cast<std::size_t>(mover_left) - 1] = 1;
        std::swap(next_perm[static_cast<std::size_t>(s) - 1], next_perm[static_cast<std::size_t>(s)]);
      }
      int trans = 0;
      for (int v = 0; v < n; ++v)
        trans += step_cost(dirs[static_cast<std::size_t>(v)], next_dirs[static_cast<std::size_t>(v)]);
      const std::uint64_t next_key = encode(next_perm, next_dirs);
      const auto it = dist.find(next_key);
      if (it == dist.end() || cost + trans < it->second) {
        if (it == dist.end() && dist.size() >= visited_cap)
          throw SizeGuard("min_corners visited-state cap exceeded");
        dist[next_key] = cost + trans;
        frontier.emplace(cost + trans, next_key);
      }
    }
  }
  throw InvariantViolation("min_corners search exhausted without reaching the identity");
}

// Exhaustive balanced-marking search: straights are forced, so only the
// 2^(#switchbacks) route assignments are tried, against the full balance
// definition spelled out locally (independent of the recognition machinery).
inline std::optional<Marking> balanced_marking_bruteforce(const Permutation& p,
                                                          int max_switchbacks = 24) {
  const int n = p.size();
  const auto cls = classify(p);
  std::vector<int> switchbacks;
  Marking m(static_cast<std::size_t>(n) + 1, Mark::none);
  for (int v = 1; v <= n; ++v) {
    switch (cls[static_cast<std::size_t>(v)]) {
      case ElementClass::left_straight: m[static_cast<std::size_t>(v)] = Mark::l; break;
      case ElementClass::right_straight: m[static_cast<std::size_t>(v)] = Mark::r; break;
      case ElementClass::switchback: switchbacks.push_back(v); break;
      case ElementClass::neither: break;
    }
  }
  if (static_cast<int>(switchbacks.size()) > max_switchbacks)
    throw SizeGuard("balanced_marking_bruteforce is limited to " +
                    std::to_string(max_switchbacks) + " switchbacks");

  // Recs enumerated here from the definition, by position quadruples.
  struct RecBounds {
    int pa, pb, pc, pd;     // positions
    int lo1, hi1, lo2, hi2; // value windows for left / right switchbacks
    bool regular;
  };
  std::vector<RecBounds> recs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int top = std::min(p(i), p(j));
      for (int k = j + 1; k <= n; ++k) {
        if (p(k) >= top) continue;
        for (int l = k + 1; l <= n; ++l)
          if (p(l) < top)
            recs.push_back({i, j, k, l, std::min(p(k), p(l)), std::max(p(k), p(l)),
                            std::min(p(i), p(j)), std::max(p(i), p(j)),
                            p(i) < p(j) && p(k) < p(l)});
      }
    }

  for (std::uint64_t route = 0; route < (1ull << switchbacks.size()); ++route) {
    for (std::size_t j = 0; j < switchbacks.size(); ++j)
      m[static_cast<std::size_t>(switchbacks[j])] = (route >> j & 1) ? Mark::rl : Mark::lr;
    bool ok = true;
    for (const auto& rec : recs) {
      int left = 0, right = 0;
      for (int pos = rec.pa + 1; pos < rec.pb; ++pos) {
        const int e = p(pos);
        if (m[static_cast<std::size_t>(e)] == Mark::rl && rec.lo1 < e && e < rec.hi1) ++left;
      }
      for (int pos = rec.pc + 1; pos < rec.pd; ++pos) {
        const int e = p(pos);
        if (m[static_cast<std::size_t>(e)] == Mark::lr && rec.lo2 < e && e < rec.hi2) ++right;
      }
      if (rec.regular ? left != right : left + right != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  return std::nullopt;
}

// Simple-by-construction random tangle: every applied row removes
// inversions, so the crossing count lands exactly on the inversion number.
// Occasional empty spacer rows keep the vertical-padding cases exercised.
inline Tangle random_simple_tangle(const Permutation& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> rows{{}};
  std::vector<int> cur = p.entries();
  const auto at_identity = [&] {
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] != static_cast<int>(i) + 1) return false;
    return true;
  };
  while (!at_identity()) {
    if (rng() % 8 == 0) rows.emplace_back();
    std::vector<int> descents;
    for (int s = 1; s < static_cast<int>(cur.size()); ++s)
      if (cur[static_cast<std::size_t>(s) - 1] > cur[static_cast<std::size_t>(s)])
        descents.push_back(s);
    for (std::size_t i = descents.size(); i > 1; --i)
      std::swap(descents[i - 1], descents[rng() % i]);
    std::vector<int> chosen;
    for (int s : descents) {
      bool clash = false;
      for (int c : chosen) clash = clash || std::abs(s - c) < 2;
      if (!clash && rng() % 2) chosen.push_back(s);
    }
    if (chosen.empty()) chosen.push_back(descents[rng() % descents.size()]);
    std::sort(chosen.begin(), chosen.end());
    for (int s : chosen)
      std::swap(cur[static_cast<std::size_t>(s) - 1], cur[static_cast<std::size_t>(s)]);
    rows.push_back(std::move(chosen));
  }
  rows.emplace_back();
  return Tangle(p, std::move(rows));
}

}  // namespace tangles
