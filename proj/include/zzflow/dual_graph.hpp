#pragma once

// Dual graph of the triangulation: one node per simplex (identified by its
// integer flow), one directed edge phi -> m_i^+(phi) per facet-sharing pair.
//
// Two constructions are provided. The flow construction uses the offset
// criterion (m_i^+ applies and the offsets at i contain no zero). The clique
// construction compares vertex sets of maximal cliques directly and is kept
// as an independent oracle for the first.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zzflow/clique.hpp"
#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"

namespace zzflow {

struct DualEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int move = 0;  // move index i in 2..n-1

  friend auto operator<=>(const DualEdge&, const DualEdge&) = default;
};

using Coordinate = std::vector<int>;

struct DualGraph {
  int n = 0;
  std::vector<IntegerFlow> nodes;      // sorted
  std::vector<Coordinate> coordinates;  // empty until embedded
  std::vector<DualEdge> edges;          // sorted

  std::size_t index_of(const IntegerFlow& f) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), f);
    if (it == nodes.end() || *it != f) throw InvalidArgument("flow is not a node of the graph");
    return static_cast<std::size_t>(it - nodes.begin());
  }

  friend bool operator==(const DualGraph&, const DualGraph&) = default;
};

enum class DualMethod { flows, cliques };

namespace detail {

inline DualGraph dual_from_flows(int n) {
  DualGraph g{n, enumerate_flows(n), {}, {}};
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    for (int i = 2; i <= n - 1; ++i) {
      auto image = flow_move(g.nodes[a], i, Sign::plus);
      if (!image || flow_offsets(g.nodes[a], i).has_zero()) continue;
      g.edges.push_back({a, g.index_of(*image), i});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline DualGraph dual_from_cliques(int n, const std::vector<Clique>& cliques) {
  std::vector<IntegerFlow> flow_of;
  flow_of.reserve(cliques.size());
  for (const Clique& c : cliques) flow_of.push_back(clique_to_flow(n, c));
  DualGraph g{n, flow_of, {}, {}};
  std::sort(g.nodes.begin(), g.nodes.end());
  if (std::adjacent_find(g.nodes.begin(), g.nodes.end()) != g.nodes.end()) {
    throw ConsistencyFault("two cliques map to the same flow for n=" + std::to_string(n));
  }
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      if (!clique_adjacent(cliques[a], cliques[b])) continue;
      bool oriented = false;
      for (int i = 2; i <= n - 1 && !oriented; ++i) {
        if (flow_move(flow_of[a], i, Sign::plus) == flow_of[b]) {
          g.edges.push_back({g.index_of(flow_of[a]), g.index_of(flow_of[b]), i});
          oriented = true;
        } else if (flow_move(flow_of[b], i, Sign::plus) == flow_of[a]) {
          g.edges.push_back({g.index_of(flow_of[b]), g.index_of(flow_of[a]), i});
          oriented = true;
        }
      }
      if (!oriented) {
        throw ConsistencyFault("adjacent cliques whose flows differ by no elementary move (n=" +
                               std::to_string(n) + ")");
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace detail

inline DualGraph build_dual(int n, DualMethod method) {
  require_graph_size(n);
  if (method == DualMethod::flows) return detail::dual_from_flows(n);
  return detail::dual_from_cliques(n, enumerate_cliques(n));
}

inline DualGraph build_dual_from_cliques(int n, const std::vector<Clique>& cliques) {
  require_graph_size(n);
  return detail::dual_from_cliques(n, cliques);
}

/// Grid coordinates: the base flow sits at the origin and an edge with move
/// index i steps +1 along axis i-1 (1-based; stored 0-based as i-2).
/// Breadth-first; every edge met is re-checked so that the assignment is
/// path independent.
inline DualGraph embed(DualGraph g) {
  const int n = g.n;
  const std::size_t dims = static_cast<std::size_t>(n - 2);
  std::vector<std::vector<std::tuple<std::size_t, int, int>>> nbrs(g.nodes.size());
  for (const DualEdge& e : g.edges) {
    nbrs[e.from].emplace_back(e.to, e.move, +1);
    nbrs[e.to].emplace_back(e.from, e.move, -1);
  }
  std::vector<std::optional<Coordinate>> at(g.nodes.size());
  const std::size_t root = g.index_of(base_flow(n));
  at[root] = Coordinate(dims, 0);
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (auto [v, move, step] : nbrs[u]) {
      Coordinate c = *at[u];
      c[static_cast<std::size_t>(move - 2)] += step;
      if (!at[v]) {
        at[v] = std::move(c);
        queue.push_back(v);
      } else if (*at[v] != c) {
        throw ConsistencyFault("grid coordinates are path dependent (n=" + std::to_string(n) + ")");
      }
    }
  }
  g.coordinates.clear();
  for (auto& c : at) {
    if (!c) throw ConsistencyFault("dual graph is disconnected (n=" + std::to_string(n) + ")");
    g.coordinates.push_back(std::move(*c));
  }
  return g;
}

struct DegreeStat {
  int sz = 0;  // out-degree
  int zs = 0;  // in-degree

  friend bool operator==(const DegreeStat&, const DegreeStat&) = default;
};

inline std::vector<DegreeStat> degree_stats(const DualGraph& g) {
  std::vector<DegreeStat> stats(g.nodes.size());
  for (const DualEdge& e : g.edges) {
    ++stats[e.from].sz;
    ++stats[e.to].zs;
  }
  return stats;
}

/// Nodes in modified lexicographic order: by coordinate sum, then
/// lexicographically. Requires an embedded graph.
inline std::vector<std::size_t> modified_lex_order(const DualGraph& g) {
  if (g.coordinates.size() != g.nodes.size()) throw InvalidArgument("graph is not embedded");
  std::vector<std::size_t> order(g.nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto sum = [&](std::size_t k) {
    int s = 0;
    for (int c : g.coordinates[k]) s += c;
    return s;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int sa = sum(a);
    const int sb = sum(b);
    if (sa != sb) return sa < sb;
    return g.coordinates[a] < g.coordinates[b];
  });
  return order;
}

}  // namespace zzflow
