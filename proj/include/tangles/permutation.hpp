#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tangles/errors.hpp"

namespace tangles {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based everywhere in this library; serialized forms are 1-based too.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
    if (entries_.empty()) throw EmptyInput("permutation needs at least one element");
    const int n = size();
    inverse_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int pos = 1; pos <= n; ++pos) {
      const int v = entries_[static_cast<std::size_t>(pos) - 1];
      if (v < 1 || v > n)
        throw NotABijection("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (inverse_[static_cast<std::size_t>(v)] != 0)
        throw NotABijection("duplicate value " + std::to_string(v));
      inverse_[static_cast<std::size_t>(v)] = pos;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(entries_.size()); }

  // Value at position pos (1-based).
  int operator()(int pos) const { return entries_[static_cast<std::size_t>(pos) - 1]; }

  // Position of a value (1-based).
  int position_of(int value) const { return inverse_[static_cast<std::size_t>(value)]; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  const std::vector<int>& entries() const { return entries_; }

  // "3 6 1 4 7 2 5"
  std::string to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(entries_[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<int> entries_;
  std::vector<int> inverse_;
};

// Accepts integers separated by whitespace and/or commas.
inline Permutation parse_permutation(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw NotABijection("not an integer: '" + token + "'");
    }
  }
  if (values.empty()) throw EmptyInput("empty permutation text");
  return Permutation(std::move(values));
}

// All inversions (a, b): a > b with a appearing before b. Pairs are listed by
// scanning position pairs left to right.
inline std::vector<std::pair<int, int>> inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) out.emplace_back(p(i), p(j));
  return out;
}

inline int inversion_number(const Permutation& p) {
  int count = 0;
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++count;
  return count;
}

inline bool is_inversion(const Permutation& p, int a, int b) {
  return a > b && p.position_of(a) < p.position_of(b);
}

// p * sigma(s): exchange the entries at positions s and s+1.
inline Permutation apply_swap(const Permutation& p, int s) {
  if (s < 1 || s > p.size() - 1)
    throw PositionOutOfRange("swap position " + std::to_string(s) + " outside 1.." +
                             std::to_string(p.size() - 1));
  std::vector<int> v = p.entries();
  std::swap(v[static_cast<std::size_t>(s) - 1], v[static_cast<std::size_t>(s)]);
  return Permutation(std::move(v));
}

// Positions (i, j, k) of a decreasing subsequence of length 3, if any.
// Linear scan: a value is the middle of a 321 pattern iff some larger value
// precedes it and some smaller value follows it.
inline std::optional<std::array<int, 3>> find_321(const Permutation& p) {
  const int n = p.size();
  std::vector<int> best_before(static_cast<std::size_t>(n) + 1, 0);  // position of prefix max
  int max_pos = 1;
  for (int j = 2; j <= n; ++j) {
    if (p(j - 1) > p(max_pos)) max_pos = j - 1;
    best_before[static_cast<std::size_t>(j)] = max_pos;
  }
  std::vector<int> best_after(static_cast<std::size_t>(n) + 2, 0);  // position of suffix min
  int min_pos = n;
  for (int j = n - 1; j >= 1; --j) {
    if (p(j + 1) < p(min_pos)) min_pos = j + 1;
    best_after[static_cast<std::size_t>(j)] = min_pos;
  }
  for (int j = 2; j <= n - 1; ++j) {
    const int i = best_before[static_cast<std::size_t>(j)];
    const int k = best_after[static_cast<std::size_t>(j)];
    if (p(i) > p(j) && p(j) > p(k)) return std::array<int, 3>{i, j, k};
  }
  return std::nullopt;
}

namespace detail {

inline bool pattern_search(const Permutation& p, const Permutation& mu, std::vector<int>& chosen,
                           int next_pos) {
  const int r = static_cast<int>(chosen.size());
  if (r == mu.size()) return true;
  for (int i = next_pos; i <= p.size() - (mu.size() - r) + 1; ++i) {
    bool ok = true;
    for (int t = 0; t < r && ok; ++t)
      ok = (p(chosen[static_cast<std::size_t>(t)]) < p(i)) == (mu(t + 1) < mu(r + 1));
    if (!ok) continue;
    chosen.push_back(i);
    if (pattern_search(p, mu, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

// Order-isomorphic subsequence containment. The 321 pattern gets the linear
// scan; everything else goes through backtracking (only ever used with small
// fixed patterns).
inline bool contains_pattern(const Permutation& p, const Permutation& mu) {
  if (mu.size() > p.size())
    throw PatternLargerThanHost("pattern size " + std::to_string(mu.size()) + " > host size " +
                                std::to_string(p.size()));
  if (mu.entries() == std::vector<int>{3, 2, 1}) return find_321(p).has_value();
  std::vector<int> chosen;
  return detail::pattern_search(p, mu, chosen, 1);
}

enum class ElementClass : unsigned char { neither, left_straight, right_straight, switchback };

inline bool is_left_class(ElementClass c) {
  return c == ElementClass::left_straight || c == ElementClass::switchback;
}
inline bool is_right_class(ElementClass c) {
  return c == ElementClass::right_straight || c == ElementClass::switchback;
}

// Per-element classification, indexed by value (slot 0 unused). An element is
// right if it is the larger member of some inversion, left if the smaller.
inline std::vector<ElementClass> classify(const Permutation& p) {
  const int n = p.size();
  std::vector<ElementClass> cls(static_cast<std::size_t>(n) + 1, ElementClass::neither);
  int prefix_max = 0;
  std::vector<char> left(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (prefix_max > p(i)) left[static_cast<std::size_t>(p(i))] = 1;
    prefix_max = std::max(prefix_max, p(i));
  }
  int suffix_min = n + 1;
  std::vector<char> right(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n; i >= 1; --i) {
    if (suffix_min < p(i)) right[static_cast<std::size_t>(p(i))] = 1;
    suffix_min = std::min(suffix_min, p(i));
  }
  for (int v = 1; v <= n; ++v) {
    if (left[static_cast<std::size_t>(v)] && right[static_cast<std::size_t>(v)])
      cls[static_cast<std::size_t>(v)] = ElementClass::switchback;
    else if (left[static_cast<std::size_t>(v)])
      cls[static_cast<std::size_t>(v)] = ElementClass::left_straight;
    else if (right[static_cast<std::size_t>(v)])
      cls[static_cast<std::size_t>(v)] = ElementClass::right_straight;
  }
  return cls;
}

// True iff the length-k prefix maps into {1..k}.
inline bool has_split(const Permutation& p, int k) {
  if (k < 1 || k > p.size() - 1)
    throw LocationOutOfRange("split location " + std::to_string(k) + " outside 1.." +
                             std::to_string(p.size() - 1));
  for (int i = 1; i <= k; ++i)
    if (p(i) > k) return false;
  return true;
}

// The size-4k family (2k, 3,2, 5,4, ..., 2k-1,2k-2, 1 | +2k shifted copy)
// whose corner minimum and simple-tangle corner minimum diverge for k >= 4.
inline Permutation family_example(int k) {
  if (k < 4) throw KTooSmall("family_example requires k >= 4, got " + std::to_string(k));
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(4) * static_cast<std::size_t>(k));
  for (int offset : {0, 2 * k}) {
    v.push_back(offset + 2 * k);
    for (int j = 1; j <= k - 1; ++j) {
      v.push_back(offset + 2 * j + 1);
      v.push_back(offset + 2 * j);
    }
    v.push_back(offset + 1);
  }
  return Permutation(std::move(v));
}

}  // namespace tangles
