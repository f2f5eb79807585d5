#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangles/errors.hpp"
#include "tangles/permutation.hpp"

namespace tangles {

// A tangle is the topmost permutation plus a schedule of swap rows. Row r
// maps the r-th permutation of the sequence to the (r+1)-th; rows hold
// pairwise non-overlapping swap positions (gap >= 2). The first and last rows
// must be empty so that every path starts and ends vertically. Interior empty
// rows are legal and meaningful (vertical spacing); they are never
// normalized away.
class Tangle {
 public:
  Tangle(Permutation start, std::vector<std::vector<int>> rows)
      : start_(std::move(start)), rows_(std::move(rows)) {
    for (auto& row : rows_) std::sort(row.begin(), row.end());
  }

  const Permutation& start() const { return start_; }
  int n() const { return start_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  friend bool operator==(const Tangle& a, const Tangle& b) {
    return a.start_ == b.start_ && a.rows_ == b.rows_;
  }

 private:
  Permutation start_;
  std::vector<std::vector<int>> rows_;
};

struct ValidationError {
  enum class Kind { overlapping_swaps, non_empty_boundary_row, position_out_of_range };
  Kind kind;
  int row;  // 0-based index into rows()
  std::string message;
};

struct InvalidTangle : Error {
  explicit InvalidTangle(ValidationError err)
      : Error(err.message), detail(std::move(err)) {}
  ValidationError detail;
};

inline std::optional<ValidationError> validate(const Tangle& t) {
  using Kind = ValidationError::Kind;
  const auto& rows = t.rows();
  if (rows.size() < 2)
    return ValidationError{Kind::non_empty_boundary_row, 0,
                           "tangle needs at least the two empty boundary rows"};
  if (!rows.front().empty())
    return ValidationError{Kind::non_empty_boundary_row, 0, "first row must be empty"};
  if (!rows.back().empty())
    return ValidationError{Kind::non_empty_boundary_row, static_cast<int>(rows.size()) - 1,
                           "last row must be empty"};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 1 || row[i] > t.n() - 1)
        return ValidationError{Kind::position_out_of_range, static_cast<int>(r),
                               "row " + std::to_string(r) + ": swap position " +
                                   std::to_string(row[i]) + " outside 1.." +
                                   std::to_string(t.n() - 1)};
      if (i > 0 && row[i] - row[i - 1] < 2)
        return ValidationError{Kind::overlapping_swaps, static_cast<int>(r),
                               "row " + std::to_string(r) + ": swaps at " +
                                   std::to_string(row[i - 1]) + " and " + std::to_string(row[i]) +
                                   " overlap"};
    }
  }
  return std::nullopt;
}

inline void ensure_valid(const Tangle& t) {
  if (auto err = validate(t)) throw InvalidTangle(*err);
}

// Sequence of |rows|+1 permutations starting at t.start().
inline std::vector<Permutation> permutation_sequence(const Tangle& t) {
  ensure_valid(t);
  std::vector<Permutation> seq;
  seq.reserve(t.rows().size() + 1);
  seq.push_back(t.start());
  std::vector<int> cur = t.start().entries();
  for (const auto& row : t.rows()) {
    for (int s : row) std::swap(cur[static_cast<std::size_t>(s) - 1], cur[static_cast<std::size_t>(s)]);
    seq.emplace_back(cur);
  }
  return seq;
}

inline bool solves(const Tangle& t, const Permutation& p) {
  ensure_valid(t);
  if (t.start() != p) return false;
  return permutation_sequence(t).back().is_identity();
}

inline int crossing_count(const Tangle& t) {
  ensure_valid(t);
  int total = 0;
  for (const auto& row : t.rows()) total += static_cast<int>(row.size());
  return total;
}

enum class Dir : unsigned char { v, l, r };

// Column of every element at every time step, plus the step directions.
// Indexed by element value (slot 0 unused). Step t covers times t..t+1;
// the empty boundary rows force the first and last steps vertical.
struct PathGeometry {
  int n = 0;
  int steps = 0;
  std::vector<std::vector<int>> column;  // [value][0..steps]
  std::vector<std::vector<Dir>> dir;     // [value][0..steps-1]
};

inline PathGeometry trace_paths(const Tangle& t) {
  const auto seq = permutation_sequence(t);
  PathGeometry g;
  g.n = t.n();
  g.steps = static_cast<int>(t.rows().size());
  g.column.assign(static_cast<std::size_t>(g.n) + 1, {});
  g.dir.assign(static_cast<std::size_t>(g.n) + 1, {});
  for (int v = 1; v <= g.n; ++v) {
    auto& col = g.column[static_cast<std::size_t>(v)];
    auto& dir = g.dir[static_cast<std::size_t>(v)];
    col.reserve(static_cast<std::size_t>(g.steps) + 1);
    for (const auto& q : seq) col.push_back(q.position_of(v));
    dir.reserve(static_cast<std::size_t>(g.steps));
    for (int s = 0; s < g.steps; ++s) {
      const int d = col[static_cast<std::size_t>(s) + 1] - col[static_cast<std::size_t>(s)];
      dir.push_back(d == 0 ? Dir::v : d > 0 ? Dir::r : Dir::l);
    }
  }
  return g;
}

// Turn cost between consecutive step directions: 0 same, 2 for the direct
// L<->R flip (double corner), 1 otherwise.
inline int corner_cost(Dir a, Dir b) {
  if (a == b) return 0;
  if (a != Dir::v && b != Dir::v) return 2;
  return 1;
}

struct CornerCount {
  int total = 0;
  std::vector<int> per_path;  // [value], slot 0 unused
};

inline CornerCount corner_count(const Tangle& t) {
  const auto g = trace_paths(t);
  CornerCount out;
  out.per_path.assign(static_cast<std::size_t>(g.n) + 1, 0);
  for (int v = 1; v <= g.n; ++v) {
    const auto& dir = g.dir[static_cast<std::size_t>(v)];
    int c = 0;
    for (std::size_t s = 0; s + 1 < dir.size(); ++s) c += corner_cost(dir[s], dir[s + 1]);
    out.per_path[static_cast<std::size_t>(v)] = c;
    out.total += c;
  }
  return out;
}

// Marking read off a drawn tangle: one letter per maximal diagonal run, top
// to bottom, vertical runs skipped. Unlike Marking this may contain any
// string over {L, R}.
using TangleMarking = std::vector<std::string>;  // [value], slot 0 unused

inline TangleMarking marking_of(const Tangle& t) {
  const auto g = trace_paths(t);
  TangleMarking m(static_cast<std::size_t>(g.n) + 1);
  for (int v = 1; v <= g.n; ++v) {
    const auto& dir = g.dir[static_cast<std::size_t>(v)];
    std::string runs;
    for (std::size_t s = 0; s < dir.size(); ++s) {
      if (dir[s] == Dir::v || (s > 0 && dir[s] == dir[s - 1])) continue;
      runs += dir[s] == Dir::l ? 'L' : 'R';
    }
    m[static_cast<std::size_t>(v)] = std::move(runs);
  }
  return m;
}

// crossings[u][v] = number of times paths u and v cross (symmetric).
inline std::vector<std::vector<int>> pair_crossing_counts(const Tangle& t) {
  ensure_valid(t);
  const int n = t.n();
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(n) + 1,
                                       std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<int> cur = t.start().entries();
  for (const auto& row : t.rows()) {
    for (int s : row) {
      const int u = cur[static_cast<std::size_t>(s) - 1];
      const int v = cur[static_cast<std::size_t>(s)];
      ++counts[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      ++counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      std::swap(cur[static_cast<std::size_t>(s) - 1], cur[static_cast<std::size_t>(s)]);
    }
  }
  return counts;
}

// Minimum-crossing test. Two equivalent accounts are computed and compared:
// total swaps vs. per-pair crossing multiplicities.
inline bool is_simple(const Tangle& t) {
  if (!solves(t, t.start())) throw DoesNotSolve("tangle does not run from its start to the identity");
  const int inv = inversion_number(t.start());
  const bool by_total = crossing_count(t) == inv;
  const auto counts = pair_crossing_counts(t);
  bool by_pairs = true;
  for (int u = 1; u <= t.n() && by_pairs; ++u)
    for (int v = u + 1; v <= t.n() && by_pairs; ++v) {
      const int want = is_inversion(t.start(), std::max(u, v), std::min(u, v)) ? 1 : 0;
      by_pairs = counts[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == want;
    }
  require_invariant(by_total == by_pairs, "crossing accounting mismatch");
  return by_total;
}

// Every path has at most 2 corners.
inline bool is_direct(const Tangle& t) {
  const auto corners = corner_count(t);
  for (int v = 1; v <= t.n(); ++v)
    if (corners.per_path[static_cast<std::size_t>(v)] > 2) return false;
  return true;
}

// Simple, and every path has at most one run of each diagonal direction.
inline bool is_perfect(const Tangle& t) {
  if (!is_simple(t)) return false;
  for (const auto& s : marking_of(t))
    if (!(s.empty() || s == "L" || s == "R" || s == "LR" || s == "RL")) return false;
  return true;
}

}  // namespace tangles
