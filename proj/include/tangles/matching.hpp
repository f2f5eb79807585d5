#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "tangles/errors.hpp"

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wdeprecated-declarations"
#pragma GCC diagnostic ignored "-Wmaybe-uninitialized"
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>
#pragma GCC diagnostic pop

namespace tangles {

// Undirected graph with 0/1 vertex weights. Each edge keeps the orientation
// it was created with (left-candidate -> right-candidate) and the index of
// the minimal rec that produced it; the matching itself ignores directions.
struct MatchGraph {
  struct Edge {
    int left = 0;
    int right = 0;
    std::size_t rec_index = 0;
  };

  std::vector<int> vertices;  // sorted ascending
  std::vector<int> weights;   // aligned with vertices, each 0 or 1
  std::vector<Edge> edges;    // no duplicate unordered pairs, no self-loops

  void add_vertex(int v, int w) {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it != vertices.end() && *it == v) {
      weights[static_cast<std::size_t>(it - vertices.begin())] = w;
      return;
    }
    weights.insert(weights.begin() + (it - vertices.begin()), w);
    vertices.insert(it, v);
  }

  int weight_of(int v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    return it != vertices.end() && *it == v ? weights[static_cast<std::size_t>(it - vertices.begin())]
                                            : 0;
  }

  bool has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }

  // Keeps the first orientation seen for an unordered pair.
  bool add_edge(int left, int right, std::size_t rec_index) {
    require_invariant(left != right, "match graph edges must join distinct vertices");
    require_invariant(has_vertex(left) && has_vertex(right),
                      "match graph edge endpoint missing from vertex set");
    for (const auto& e : edges) {
      if ((e.left == left && e.right == right) || (e.left == right && e.right == left))
        return false;
    }
    edges.push_back({left, right, rec_index});
    return true;
  }
};

struct Matching {
  std::vector<MatchGraph::Edge> edges;
  long long total_weight = 0;  // summed endpoint weights
};

namespace detail {

// Max edge-weight matching value via the blossom implementation in
// boost::graph; weights here are w(u)+w(v) in {0,1,2}.
inline long long max_matching_weight(int vertex_count,
                                     const std::vector<std::array<int, 3>>& edges) {
  if (edges.empty()) return 0;
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_weight_t, long>>;
  Graph g(static_cast<std::size_t>(vertex_count));
  for (const auto& e : edges)
    boost::add_edge(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]), e[2], g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(
      static_cast<std::size_t>(vertex_count));
  boost::maximum_weighted_matching(g, &mate[0]);
  return boost::matching_weight_sum(g, &mate[0]);
}

}  // namespace detail

// Maximum vertex-weighted matching. Vertex weights are pushed onto edges as
// w(u)+w(v), which makes the summed edge weight of any matching equal the
// total weight of matched vertices, so a maximum edge-weight matching is
// exactly what is needed. The reported edge set is re-derived greedily in
// ascending (min,max) endpoint order, keeping an edge only when the optimum
// is still reachable, which pins down one deterministic optimal matching
// (the lexicographically least one among those without weight-neutral edges).
inline Matching max_vertex_weight_matching(const MatchGraph& g) {
  for (int w : g.weights)
    if (w != 0 && w != 1) throw Error("match graph weights must be 0 or 1");

  std::map<int, int> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    index[g.vertices[i]] = static_cast<int>(i);

  const auto solve = [&](const std::vector<MatchGraph::Edge>& edges,
                         const std::vector<char>& banned) {
    std::vector<std::array<int, 3>> compact;
    for (const auto& e : edges) {
      const int u = index.at(e.left), v = index.at(e.right);
      if (banned[static_cast<std::size_t>(u)] || banned[static_cast<std::size_t>(v)]) continue;
      compact.push_back({u, v, g.weight_of(e.left) + g.weight_of(e.right)});
    }
    return detail::max_matching_weight(static_cast<int>(g.vertices.size()), compact);
  };

  std::vector<char> banned(g.vertices.size(), 0);
  const long long best = solve(g.edges, banned);

  std::vector<MatchGraph::Edge> order = g.edges;
  std::sort(order.begin(), order.end(), [](const MatchGraph::Edge& x, const MatchGraph::Edge& y) {
    const auto kx = std::minmax(x.left, x.right);
    const auto ky = std::minmax(y.left, y.right);
    return kx < ky;
  });

  Matching out;
  for (const auto& e : order) {
    const int u = index.at(e.left), v = index.at(e.right);
    if (banned[static_cast<std::size_t>(u)] || banned[static_cast<std::size_t>(v)]) continue;
    const int gain = g.weight_of(e.left) + g.weight_of(e.right);
    if (gain == 0) continue;
    banned[static_cast<std::size_t>(u)] = banned[static_cast<std::size_t>(v)] = 1;
    if (out.total_weight + gain + solve(g.edges, banned) == best) {
      out.edges.push_back(e);
      out.total_weight += gain;
    } else {
      banned[static_cast<std::size_t>(u)] = banned[static_cast<std::size_t>(v)] = 0;
    }
  }
  require_invariant(out.total_weight == best, "matching reconstruction lost weight");
  return out;
}

}  // namespace tangles
