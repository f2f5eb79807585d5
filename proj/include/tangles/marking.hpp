#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tangles/errors.hpp"
#include "tangles/permutation.hpp"

namespace tangles {

// Marking symbols for permutation elements. Straights are forced to L or R,
// switchbacks carry one of the two-letter routes, untouched elements stay
// empty. Anything outside this alphabet can only come from reading a drawn
// tangle (TangleMarking).
enum class Mark : unsigned char { none, l, r, lr, rl };

inline std::string to_string(Mark m) {
  switch (m) {
    case Mark::none: return "";
    case Mark::l: return "L";
    case Mark::r: return "R";
    case Mark::lr: return "LR";
    case Mark::rl: return "RL";
  }
  return "";
}

constexpr bool starts_r(Mark m) { return m == Mark::r || m == Mark::rl; }
constexpr bool starts_l(Mark m) { return m == Mark::l || m == Mark::lr; }

// [value] -> Mark, slot 0 unused.
using Marking = std::vector<Mark>;

inline bool is_marking_for(const Permutation& p, const Marking& m) {
  if (static_cast<int>(m.size()) != p.size() + 1) return false;
  const auto cls = classify(p);
  for (int v = 1; v <= p.size(); ++v) {
    const Mark mark = m[static_cast<std::size_t>(v)];
    switch (cls[static_cast<std::size_t>(v)]) {
      case ElementClass::neither:
        if (mark != Mark::none) return false;
        break;
      case ElementClass::left_straight:
        if (mark != Mark::l) return false;
        break;
      case ElementClass::right_straight:
        if (mark != Mark::r) return false;
        break;
      case ElementClass::switchback:
        if (mark != Mark::lr && mark != Mark::rl) return false;
        break;
    }
  }
  return true;
}

// Quadruple of values in order of appearance with min{a,b} > max{c,d}. The
// four paths bound a rectangle in any perfect drawing.
struct Rec {
  int a = 0, b = 0, c = 0, d = 0;
  bool regular = false;  // a < b and c < d

  friend bool operator==(const Rec& x, const Rec& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// All recs, by scanning position quadruples with prefix pruning.
inline std::vector<Rec> enumerate_recs(const Permutation& p) {
  const int n = p.size();
  std::vector<Rec> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int top = std::min(p(i), p(j));
      if (top <= 1) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (p(k) >= top) continue;
        for (int l = k + 1; l <= n; ++l)
          if (p(l) < top)
            out.push_back({p(i), p(j), p(k), p(l), p(i) < p(j) && p(k) < p(l)});
      }
    }
  return out;
}

// Actual switchbacks of a rec under a marking. A left switchback sits
// positionally between a and b, has value strictly between c and d, and is
// routed RL; right switchbacks mirror this.
struct RecSwitchbacks {
  std::vector<int> left, right;
};

inline RecSwitchbacks switchbacks_under(const Permutation& p, const Marking& m, const Rec& rec) {
  if (!is_marking_for(p, m)) throw NotAMarkingFor("marking does not fit the permutation");
  RecSwitchbacks out;
  const int pa = p.position_of(rec.a), pb = p.position_of(rec.b);
  const int pc = p.position_of(rec.c), pd = p.position_of(rec.d);
  for (int pos = pa + 1; pos < pb; ++pos) {
    const int e = p(pos);
    if (m[static_cast<std::size_t>(e)] == Mark::rl && std::min(rec.c, rec.d) < e &&
        e < std::max(rec.c, rec.d))
      out.left.push_back(e);
  }
  for (int pos = pc + 1; pos < pd; ++pos) {
    const int e = p(pos);
    if (m[static_cast<std::size_t>(e)] == Mark::lr && std::min(rec.a, rec.b) < e &&
        e < std::max(rec.a, rec.b))
      out.right.push_back(e);
  }
  return out;
}

// Right (left) minimal pairs are value-increasing consecutive right (left)
// straights in position order; a minimal rec combines one of each into a rec.
inline std::vector<Rec> minimal_recs(const Permutation& p) {
  const auto cls = classify(p);
  std::vector<int> rights, lefts;  // in position order
  for (int pos = 1; pos <= p.size(); ++pos) {
    const int v = p(pos);
    if (cls[static_cast<std::size_t>(v)] == ElementClass::right_straight) rights.push_back(v);
    if (cls[static_cast<std::size_t>(v)] == ElementClass::left_straight) lefts.push_back(v);
  }
  std::vector<Rec> out;
  for (std::size_t i = 0; i + 1 < rights.size(); ++i) {
    const int a = rights[i], b = rights[i + 1];
    if (a >= b) continue;
    for (std::size_t j = 0; j + 1 < lefts.size(); ++j) {
      const int c = lefts[j], d = lefts[j + 1];
      if (c >= d) continue;
      if (p.position_of(b) < p.position_of(c) && a > d) out.push_back({a, b, c, d, true});
    }
  }
  return out;
}

// Marking-independent candidate switchbacks per rec, plus the global unions
// used by the recognizer. rho_l(rec) holds the switchback elements that could
// be routed as left switchbacks of the rec under some marking; rho_r mirrors.
struct RecCandidates {
  Rec rec;
  std::vector<int> rho_l, rho_r;
};

struct CandidateSets {
  std::vector<RecCandidates> recs;     // every rec of the permutation
  std::vector<std::size_t> minimal;    // indices into recs
  std::vector<int> i_l, i_r;           // unions of rho over irregular recs
  std::vector<int> r_l, r_r;           // unions of rho over regular recs
  std::vector<int> f;                  // (r_l&r_r) | (i_l&r_r) | (i_r&r_l)
};

namespace detail {

inline bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline RecCandidates rec_candidates(const Permutation& p, const std::vector<ElementClass>& cls,
                                    const Rec& rec) {
  RecCandidates out;
  out.rec = rec;
  const int pa = p.position_of(rec.a), pb = p.position_of(rec.b);
  const int pc = p.position_of(rec.c), pd = p.position_of(rec.d);
  for (int pos = pa + 1; pos < pb; ++pos) {
    const int e = p(pos);
    if (cls[static_cast<std::size_t>(e)] == ElementClass::switchback &&
        std::min(rec.c, rec.d) < e && e < std::max(rec.c, rec.d))
      out.rho_l.push_back(e);
  }
  for (int pos = pc + 1; pos < pd; ++pos) {
    const int e = p(pos);
    if (cls[static_cast<std::size_t>(e)] == ElementClass::switchback &&
        std::min(rec.a, rec.b) < e && e < std::max(rec.a, rec.b))
      out.rho_r.push_back(e);
  }
  return out;
}

}  // namespace detail

inline CandidateSets candidate_sets(const Permutation& p) {
  const auto cls = classify(p);
  CandidateSets out;
  std::map<std::tuple<int, int, int, int>, std::size_t> index;
  for (const auto& rec : enumerate_recs(p)) {
    index.emplace(std::make_tuple(rec.a, rec.b, rec.c, rec.d), out.recs.size());
    out.recs.push_back(detail::rec_candidates(p, cls, rec));
    const auto& rc = out.recs.back();
    auto& gl = rec.regular ? out.r_l : out.i_l;
    auto& gr = rec.regular ? out.r_r : out.i_r;
    gl.insert(gl.end(), rc.rho_l.begin(), rc.rho_l.end());
    gr.insert(gr.end(), rc.rho_r.begin(), rc.rho_r.end());
  }
  detail::sort_unique(out.i_l);
  detail::sort_unique(out.i_r);
  detail::sort_unique(out.r_l);
  detail::sort_unique(out.r_r);
  for (const auto& part : {detail::sorted_intersection(out.r_l, out.r_r),
                           detail::sorted_intersection(out.i_l, out.r_r),
                           detail::sorted_intersection(out.i_r, out.r_l)})
    out.f.insert(out.f.end(), part.begin(), part.end());
  detail::sort_unique(out.f);

  std::vector<char> seen_l(static_cast<std::size_t>(p.size()) + 1, 0);
  std::vector<char> seen_r(static_cast<std::size_t>(p.size()) + 1, 0);
  for (const auto& rec : minimal_recs(p)) {
    const auto it = index.find(std::make_tuple(rec.a, rec.b, rec.c, rec.d));
    require_invariant(it != index.end(), "minimal rec missing from the rec enumeration");
    out.minimal.push_back(it->second);
    // Candidate sets of distinct minimal recs never share an element per side.
    for (int e : out.recs[it->second].rho_l) {
      require_invariant(!seen_l[static_cast<std::size_t>(e)],
                        "left candidates of two minimal recs intersect");
      seen_l[static_cast<std::size_t>(e)] = 1;
    }
    for (int e : out.recs[it->second].rho_r) {
      require_invariant(!seen_r[static_cast<std::size_t>(e)],
                        "right candidates of two minimal recs intersect");
      seen_r[static_cast<std::size_t>(e)] = 1;
    }
  }
  return out;
}

enum class BalanceMode { full, s, ms };

namespace detail {

inline int count_marked(const std::vector<int>& candidates, const Marking& m, Mark wanted) {
  int count = 0;
  for (int e : candidates)
    if (m[static_cast<std::size_t>(e)] == wanted) ++count;
  return count;
}

}  // namespace detail

// Balance against a precomputed candidate snapshot (must belong to p).
inline bool is_balanced(const Permutation& p, const Marking& m, BalanceMode mode,
                        const CandidateSets& cs) {
  if (!is_marking_for(p, m)) throw NotAMarkingFor("marking does not fit the permutation");
  switch (mode) {
    case BalanceMode::full:
      for (const auto& rc : cs.recs) {
        const int left = detail::count_marked(rc.rho_l, m, Mark::rl);
        const int right = detail::count_marked(rc.rho_r, m, Mark::lr);
        if (rc.rec.regular ? left != right : left + right != 0) return false;
      }
      return true;
    case BalanceMode::s: {
      const auto cls = classify(p);
      auto straight = [&](int v) {
        const auto c = cls[static_cast<std::size_t>(v)];
        return c == ElementClass::left_straight || c == ElementClass::right_straight;
      };
      for (const auto& rc : cs.recs) {
        const bool all_straight = straight(rc.rec.a) && straight(rc.rec.b) &&
                                  straight(rc.rec.c) && straight(rc.rec.d);
        if (!rc.rec.regular) {
          if (detail::count_marked(rc.rho_l, m, Mark::rl) +
                  detail::count_marked(rc.rho_r, m, Mark::lr) !=
              0)
            return false;
        }
        if (all_straight && detail::count_marked(rc.rho_l, m, Mark::rl) !=
                                detail::count_marked(rc.rho_r, m, Mark::lr))
          return false;
      }
      return true;
    }
    case BalanceMode::ms:
      // Irregular emptiness via membership in the irregular candidate unions.
      for (int v = 1; v <= p.size(); ++v) {
        const Mark mark = m[static_cast<std::size_t>(v)];
        if (mark == Mark::rl && detail::sorted_contains(cs.i_l, v)) return false;
        if (mark == Mark::lr && detail::sorted_contains(cs.i_r, v)) return false;
      }
      for (std::size_t idx : cs.minimal) {
        const auto& rc = cs.recs[idx];
        if (detail::count_marked(rc.rho_l, m, Mark::rl) !=
            detail::count_marked(rc.rho_r, m, Mark::lr))
          return false;
      }
      return true;
  }
  return false;
}

inline bool is_balanced(const Permutation& p, const Marking& m, BalanceMode mode) {
  return is_balanced(p, m, mode, candidate_sets(p));
}

// Aligned: whenever adjacent elements are routed R... then L..., the pair is
// an inversion (the routes immediately cross).
inline bool is_aligned(const Permutation& p, const Marking& m) {
  if (!is_marking_for(p, m)) throw NotAMarkingFor("marking does not fit the permutation");
  for (int pos = 1; pos <= p.size() - 1; ++pos) {
    const int u = p(pos), v = p(pos + 1);
    if (starts_r(m[static_cast<std::size_t>(u)]) && starts_l(m[static_cast<std::size_t>(v)]) &&
        u < v)
      return false;
  }
  return true;
}

// Alignment transform: repeatedly take the leftmost adjacent violating pair
// (necessarily values a, a+1 routed RL, LR) and exchange their routes. Every
// iteration keeps the marking balanced; the sum of LR-routed values drops by
// one per step, so the loop terminates. Returns every intermediate state,
// ending with the aligned marking.
inline std::vector<Marking> align_iterations(const Permutation& p, const Marking& m) {
  if (!is_balanced(p, m, BalanceMode::full)) throw NotBalancedInput("align requires a balanced marking");
  std::vector<Marking> states{m};
  Marking cur = m;
  for (;;) {
    int found = 0;
    for (int pos = 1; pos <= p.size() - 1 && !found; ++pos) {
      const int u = p(pos), v = p(pos + 1);
      if (starts_r(cur[static_cast<std::size_t>(u)]) &&
          starts_l(cur[static_cast<std::size_t>(v)]) && u < v)
        found = pos;
    }
    if (!found) break;
    const int u = p(found), v = p(found + 1);
    require_invariant(v == u + 1, "violating pair must be consecutive values");
    require_invariant(cur[static_cast<std::size_t>(u)] == Mark::rl &&
                          cur[static_cast<std::size_t>(v)] == Mark::lr,
                      "violating pair must be routed RL, LR");
    cur[static_cast<std::size_t>(u)] = Mark::lr;
    cur[static_cast<std::size_t>(v)] = Mark::rl;
    assert(is_balanced(p, cur, BalanceMode::full));
    states.push_back(cur);
  }
  return states;
}

inline Marking align(const Permutation& p, const Marking& m) {
  return align_iterations(p, m).back();
}

}  // namespace tangles
