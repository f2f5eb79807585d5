#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tangles/errors.hpp"
#include "tangles/marking.hpp"
#include "tangles/matching.hpp"
#include "tangles/permutation.hpp"

namespace tangles {

enum class NotPerfectReason { irregular_conflict, matching_deficit };

inline std::string to_string(NotPerfectReason r) {
  return r == NotPerfectReason::irregular_conflict
             ? "a switchback is forced into both routes by irregular recs"
             : "forced switchbacks cannot all be matched";
}

struct RecognizeResult {
  bool perfect = false;
  Marking marking;  // balanced marking when perfect
  NotPerfectReason reason = NotPerfectReason::irregular_conflict;
  std::vector<int> obstruction;  // conflicting elements / unmatched forced set
};

// Step 3.1: vertices are the regular-rec candidates, edges pair the left and
// right candidate sets of each minimal rec (outside the irregular unions).
// Step 3.2: weight 1 on the forced set F.
inline MatchGraph build_match_graph([[maybe_unused]] const Permutation& p,
                                    const CandidateSets& cs) {
  MatchGraph g;
  for (int v : cs.r_l) g.add_vertex(v, 0);
  for (int v : cs.r_r) g.add_vertex(v, 0);
  for (int v : cs.f) g.add_vertex(v, 1);
  for (std::size_t idx : cs.minimal) {
    const auto& rc = cs.recs[idx];
    for (int i : rc.rho_l) {
      if (detail::sorted_contains(cs.i_l, i)) continue;
      for (int j : rc.rho_r) {
        if (detail::sorted_contains(cs.i_r, j)) continue;
        g.add_edge(i, j, idx);
      }
    }
  }
  return g;
}

// The recognition pipeline: force straights, force irregular-rec candidates
// away from their harmful route (stopping on a two-sided conflict), then
// cover the remaining forced switchbacks with a maximum vertex-weighted
// matching over minimal recs and route the matched pairs in opposite
// directions. The emitted marking is re-verified against the full balance
// definition before it is returned.
inline RecognizeResult recognize(const Permutation& p) {
  const int n = p.size();
  const auto cls = classify(p);
  const auto cs = candidate_sets(p);

  // Step 1: straights and untouched elements are forced.
  constexpr Mark unset = static_cast<Mark>(255);
  std::vector<Mark> m(static_cast<std::size_t>(n) + 1, unset);
  m[0] = Mark::none;
  for (int v = 1; v <= n; ++v) {
    switch (cls[static_cast<std::size_t>(v)]) {
      case ElementClass::neither: m[static_cast<std::size_t>(v)] = Mark::none; break;
      case ElementClass::left_straight: m[static_cast<std::size_t>(v)] = Mark::l; break;
      case ElementClass::right_straight: m[static_cast<std::size_t>(v)] = Mark::r; break;
      case ElementClass::switchback: break;
    }
  }

  // Step 2: irregular recs must stay empty.
  const auto conflict = detail::sorted_intersection(cs.i_l, cs.i_r);
  if (!conflict.empty())
    return {false, {}, NotPerfectReason::irregular_conflict, conflict};
  for (int v : cs.i_l) m[static_cast<std::size_t>(v)] = Mark::lr;
  for (int v : cs.i_r) m[static_cast<std::size_t>(v)] = Mark::rl;

  // Steps 3 and 4.
  const MatchGraph graph = build_match_graph(p, cs);
  const Matching matching = max_vertex_weight_matching(graph);
  if (matching.total_weight < static_cast<long long>(cs.f.size()))
    return {false, {}, NotPerfectReason::matching_deficit, cs.f};

  // Step 5.1: matched pairs take opposite routes, in the stored orientation.
  for (const auto& e : matching.edges) {
    auto& left = m[static_cast<std::size_t>(e.left)];
    auto& right = m[static_cast<std::size_t>(e.right)];
    require_invariant(left == unset || left == Mark::rl,
                      "matched left endpoint already routed incompatibly");
    require_invariant(right == unset || right == Mark::lr,
                      "matched right endpoint already routed incompatibly");
    if (left == unset) left = Mark::rl;
    if (right == unset) right = Mark::lr;
  }
  // Anything in both regular candidate unions is in F and must be matched by
  // now.
  for (int v : detail::sorted_intersection(cs.r_l, cs.r_r))
    require_invariant(m[static_cast<std::size_t>(v)] != unset,
                      "two-sided regular candidate left unassigned after matching");

  // Step 5.2: leftover switchbacks take the harmless route.
  for (int v = 1; v <= n; ++v) {
    if (m[static_cast<std::size_t>(v)] != unset) continue;
    if (detail::sorted_contains(cs.r_l, v))
      m[static_cast<std::size_t>(v)] = Mark::lr;
    else if (detail::sorted_contains(cs.r_r, v))
      m[static_cast<std::size_t>(v)] = Mark::rl;
    else
      m[static_cast<std::size_t>(v)] = Mark::lr;
  }

  Marking marking(m.begin(), m.end());
  require_invariant(is_marking_for(p, marking), "recognizer produced a malformed marking");
  require_invariant(is_balanced(p, marking, BalanceMode::full, cs),
                    "recognizer marking failed full balance verification");
  return {true, std::move(marking), NotPerfectReason::irregular_conflict, {}};
}

enum class CensusPredicate { perfect, direct, both };

struct CensusCounts {
  int n = 0;
  long long total = 0;
  long long perfect = 0;
  long long direct = 0;
  std::vector<Permutation> non_perfect;  // filled only when listing
};

// Sweeps S_n in lexicographic one-line order.
inline CensusCounts census(int n, CensusPredicate what, int bound = 8,
                           bool list_non_perfect = false) {
  if (n < 1 || n > bound)
    throw BoundExceeded("census size " + std::to_string(n) + " outside 1.." +
                        std::to_string(bound));
  CensusCounts out;
  out.n = n;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation p(v);
    ++out.total;
    if (what != CensusPredicate::direct) {
      if (recognize(p).perfect)
        ++out.perfect;
      else if (list_non_perfect)
        out.non_perfect.push_back(p);
    }
    if (what != CensusPredicate::perfect && !find_321(p)) ++out.direct;
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace tangles
