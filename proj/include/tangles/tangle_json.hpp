#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tangles/errors.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

// {"n":2,"start":[2,1],"rows":[[],[1],[]]} — keys in this order, positions
// and values 1-based, inner row arrays strictly increasing.
inline std::string write_tangle(const Tangle& t) {
  ensure_valid(t);
  nlohmann::ordered_json j;
  j["n"] = t.n();
  j["start"] = t.start().entries();
  j["rows"] = t.rows();
  return j.dump();
}

inline Tangle read_tangle(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedJson(e.what());
  }
  if (!j.is_object()) throw SchemaViolation("top level must be an object");
  for (const auto& item : j.items())
    if (item.key() != "n" && item.key() != "start" && item.key() != "rows")
      throw SchemaViolation("unknown key '" + item.key() + "'");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw SchemaViolation("'n' must be an integer");
  if (!j.contains("start") || !j["start"].is_array())
    throw SchemaViolation("'start' must be an array");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw SchemaViolation("'rows' must be an array");
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 1'000'000) throw SchemaViolation("'n' out of range");
  std::vector<int> start;
  for (const auto& x : j["start"]) {
    if (!x.is_number_integer()) throw SchemaViolation("'start' entries must be integers");
    start.push_back(x.get<int>());
  }
  if (static_cast<long long>(start.size()) != n)
    throw SchemaViolation("'start' length disagrees with 'n'");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw SchemaViolation("'rows' entries must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw SchemaViolation("row entries must be integers");
      r.push_back(x.get<int>());
    }
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (r[i + 1] <= r[i]) throw SchemaViolation("row positions must be strictly increasing");
    rows.push_back(std::move(r));
  }
  auto parse_start = [&]() -> Permutation {
    try {
      return Permutation(std::move(start));
    } catch (const Error& e) {
      throw SchemaViolation(std::string("'start' is not a permutation: ") + e.what());
    }
  };
  Tangle t(parse_start(), std::move(rows));
  ensure_valid(t);
  return t;
}

}  // namespace tangles
