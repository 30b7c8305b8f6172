#pragma once

// Maximal cliques of pairwise coherent routes: the simplices of the DKK
// triangulation of the unit flow polytope.
//
// Two routes conflict when, at some inner vertex both visit, their prefixes
// and their suffixes are ordered strictly oppositely by the framing. Routes
// are coherent when they do not conflict.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/graph.hpp"
#include "zzflow/grove.hpp"

namespace zzflow {

struct Clique {
  int n = 0;
  std::vector<Route> routes;  // sorted, distinct

  friend bool operator==(const Clique&, const Clique&) = default;
  friend auto operator<=>(const Clique& a, const Clique& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return std::lexicographical_compare_three_way(a.routes.begin(), a.routes.end(),
                                                  b.routes.begin(), b.routes.end());
  }
};

/// Canonicalizes: checks every member is a route of n, sorts, drops duplicates.
inline Clique make_clique(int n, std::vector<Route> routes) {
  require_graph_size(n);
  for (const Route& r : routes) {
    if (r.graph_size() != n || !r.is_route()) {
      throw MalformedClique("'" + r.str() + "' is not a route for n=" + std::to_string(n));
    }
  }
  std::sort(routes.begin(), routes.end());
  routes.erase(std::unique(routes.begin(), routes.end()), routes.end());
  return {n, std::move(routes)};
}

inline bool coherent(int n, const Route& a, const Route& b) {
  for (int v = 2; v <= n - 1; ++v) {
    if (!a.visits(v) || !b.visits(v)) continue;
    auto pre = framed_compare(n, v, PathEnd::prefix, a.prefix_to(v), b.prefix_to(v));
    auto suf = framed_compare(n, v, PathEnd::suffix, a.suffix_from(v), b.suffix_from(v));
    if ((pre < 0 && suf > 0) || (pre > 0 && suf < 0)) return false;
  }
  return true;
}

namespace detail {

using Bits = boost::dynamic_bitset<>;

// Bron-Kerbosch with Tomita pivoting over a bitset adjacency.
class MaximalCliques {
 public:
  explicit MaximalCliques(const std::vector<Bits>& adj) : adj_(adj) {}

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t v = adj_.size();
    Bits p(v);
    p.set();
    expand(p, Bits(v));
    return std::move(found_);
  }

 private:
  void expand(Bits p, Bits x) {
    if (p.none() && x.none()) {
      found_.push_back(current_);
      return;
    }
    // Pivot maximizing |P ∩ N(u)| over u in P ∪ X.
    Bits px = p | x;
    std::size_t pivot = Bits::npos;
    std::size_t best = 0;
    for (std::size_t u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      std::size_t c = (p & adj_[u]).count();
      if (pivot == Bits::npos || c > best) {
        best = c;
        pivot = u;
      }
    }
    Bits candidates = p - adj_[pivot];
    for (std::size_t u = candidates.find_first(); u != Bits::npos; u = candidates.find_next(u)) {
      current_.push_back(u);
      expand(p & adj_[u], x & adj_[u]);
      current_.pop_back();
      p.reset(u);
      x.set(u);
    }
  }

  const std::vector<Bits>& adj_;
  std::vector<std::size_t> current_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace detail

/// All maximal cliques, sorted. Each must have exactly n+1 routes; anything
/// else means the coherence relation does not give a triangulation.
inline std::vector<Clique> enumerate_cliques(int n) {
  const std::vector<Route> routes = enumerate_routes(n);
  const std::size_t v = routes.size();
  std::vector<detail::Bits> adj(v, detail::Bits(v));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (coherent(n, routes[a], routes[b])) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  }
  std::vector<Clique> cliques;
  for (const auto& members : detail::MaximalCliques(adj).run()) {
    if (members.size() != static_cast<std::size_t>(n + 1)) {
      throw ConsistencyFault("maximal clique of size " + std::to_string(members.size()) +
                             " for n=" + std::to_string(n) + ", expected n+1");
    }
    std::vector<Route> rs;
    for (std::size_t k : members) rs.push_back(routes[k]);
    cliques.push_back(make_clique(n, std::move(rs)));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

inline std::size_t shared_routes(const Clique& a, const Clique& b) {
  std::size_t k = 0;
  auto ia = a.routes.begin();
  auto ib = b.routes.begin();
  while (ia != a.routes.end() && ib != b.routes.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++k;
      ++ia;
      ++ib;
    }
  }
  return k;
}

/// Simplices sharing a facet: the vertex sets differ in exactly one route.
inline bool clique_adjacent(const Clique& a, const Clique& b) {
  if (a.n != b.n) throw InvalidArgument("cliques belong to different graph sizes");
  return a != b && shared_routes(a, b) == static_cast<std::size_t>(a.n);
}

/// For adjacent cliques, (route only in a, route only in b).
inline std::pair<Route, Route> exchanged_routes(const Clique& a, const Clique& b) {
  if (!clique_adjacent(a, b)) throw InvalidArgument("cliques are not adjacent");
  std::vector<Route> only_a;
  std::vector<Route> only_b;
  std::set_difference(a.routes.begin(), a.routes.end(), b.routes.begin(), b.routes.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.routes.begin(), b.routes.end(), a.routes.begin(), a.routes.end(),
                      std::back_inserter(only_b));
  return {only_a.front(), only_b.front()};
}

/// Distinct prefixes at inner vertex i realized by routes of the clique, in
/// framing order (bottom to top).
inline std::vector<Path> realized_prefixes(const Clique& c, int i) {
  require_inner(c.n, i);
  std::vector<Path> prefixes;
  for (const Route& r : c.routes) {
    if (!r.visits(i)) continue;
    Path p = r.prefix_to(i);
    if (std::find(prefixes.begin(), prefixes.end(), p) == prefixes.end()) prefixes.push_back(p);
  }
  std::sort(prefixes.begin(), prefixes.end(), [&](const Path& a, const Path& b) {
    return framed_compare(c.n, i, PathEnd::prefix, a, b) < 0;
  });
  return prefixes;
}

/// Flow of each edge e leaving inner vertex i: (number of distinct prefixes
/// at i whose route continues along e) - 1. Edges out of the source get 0.
/// Independent of the framing, so it also applies to cliques built from
/// other framings.
inline IntegerFlow clique_to_flow(int n, const Clique& c) {
  require_graph_size(n);
  if (c.n != n) throw InvalidArgument("clique belongs to a different graph size");
  IntegerFlow f{n, std::vector<int>(static_cast<std::size_t>(n - 1), 0),
                std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int i = 2; i <= n - 1; ++i) {
    std::set<Path> via_slack;
    std::set<Path> via_nonslack;
    for (const Route& r : c.routes) {
      auto e = r.edge_after(i);
      if (!e) continue;
      (e->kind == EdgeKind::slack ? via_slack : via_nonslack).insert(r.prefix_to(i));
    }
    if (via_slack.empty() || via_nonslack.empty()) {
      throw MalformedClique("no route of the clique leaves vertex " + std::to_string(i) +
                            " along " + (via_slack.empty() ? "x" : "y") + std::to_string(i));
    }
    f.x(i) = static_cast<int>(via_slack.size()) - 1;
    f.y(i) = static_cast<int>(via_nonslack.size()) - 1;
  }
  return f;
}

/// Tree i: left vertices are the realized prefixes at i in framing order,
/// right vertices x_i then y_i, joined when some route realizes the pair.
inline Grove clique_to_grove(int n, const Clique& c) {
  require_graph_size(n);
  if (c.n != n) throw InvalidArgument("clique belongs to a different graph size");
  Grove g{n, {}};
  for (int i = 2; i <= n - 1; ++i) {
    const std::vector<Path> prefixes = realized_prefixes(c, i);
    const std::size_t p = prefixes.size();
    std::vector<bool> to_slack(p, false);
    std::vector<bool> to_nonslack(p, false);
    for (const Route& r : c.routes) {
      auto e = r.edge_after(i);
      if (!e) continue;
      auto k = static_cast<std::size_t>(
          std::find(prefixes.begin(), prefixes.end(), r.prefix_to(i)) - prefixes.begin());
      (e->kind == EdgeKind::slack ? to_slack : to_nonslack)[k] = true;
    }
    const auto d1 = static_cast<std::size_t>(std::count(to_slack.begin(), to_slack.end(), true));
    const auto d2 =
        static_cast<std::size_t>(std::count(to_nonslack.begin(), to_nonslack.end(), true));
    // Noncrossing tree: r_1 ~ l_1..l_d1 and r_2 ~ l_d1..l_p.
    bool ok = p >= 1 && d1 >= 1 && d2 >= 1 && d1 + d2 == p + 1;
    for (std::size_t k = 0; ok && k < p; ++k) {
      ok = to_slack[k] == (k < d1) && to_nonslack[k] == (k + 1 >= d1);
    }
    if (!ok) {
      throw MalformedClique("tree " + std::to_string(i) + " is not a noncrossing tree");
    }
    g.trees.push_back({static_cast<int>(p), static_cast<int>(d1), static_cast<int>(d2)});
  }
  if (auto why = grove_violation(g); !why.empty()) {
    throw MalformedClique("clique yields an invalid grove: " + why);
  }
  return g;
}

/// Number of routes of the clique that begin with prefix P (ending at i)
/// followed by edge e.
inline std::size_t routes_extending(const Clique& c, const Path& prefix, Edge e) {
  const int i = prefix.head();
  return static_cast<std::size_t>(std::count_if(c.routes.begin(), c.routes.end(), [&](const Route& r) {
    return r.edge_after(i) == e && r.prefix_to(i) == prefix;
  }));
}

}  // namespace zzflow
