#pragma once

// Shelling check for an ordering of the simplices of the triangulation.
// Simplex k in the order is fine when every nonempty intersection with an
// earlier simplex lies inside some facet (n-subset of its n+1 vertices) that
// it shares with an earlier simplex. s_k counts those shared facets and the
// h-vector tallies the s_k.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "zzflow/clique.hpp"
#include "zzflow/dual_graph.hpp"
#include "zzflow/ehrhart.hpp"

namespace zzflow {

enum class ShellingDirection { forward, reverse };

struct ShellingResult {
  bool is_shelling = true;
  std::vector<std::size_t> order;  // node indices of the dual graph
  std::vector<int> shared_facets;  // s_k for each position of the order
  Polynomial h;
  std::optional<std::size_t> first_failure;  // position in the order
};

/// `simplices[k]` is the clique whose flow is node k of `embedded`.
inline ShellingResult check_shelling(const std::vector<Clique>& simplices,
                                     const DualGraph& embedded, ShellingDirection direction) {
  using Bits = boost::dynamic_bitset<>;
  if (simplices.size() != embedded.nodes.size()) {
    throw InvalidArgument("one clique per dual-graph node expected");
  }
  const int n = embedded.n;
  const std::vector<Route> routes = enumerate_routes(n);
  auto vertex_set = [&](const Clique& c) {
    Bits b(routes.size());
    for (const Route& r : c.routes) {
      auto it = std::lower_bound(routes.begin(), routes.end(), r);
      if (it == routes.end() || *it != r) throw MalformedClique("unknown route " + r.str());
      b.set(static_cast<std::size_t>(it - routes.begin()));
    }
    return b;
  };

  ShellingResult res;
  res.order = modified_lex_order(embedded);
  if (direction == ShellingDirection::reverse) std::reverse(res.order.begin(), res.order.end());

  std::vector<Bits> placed;
  std::vector<int> s_values;
  for (std::size_t pos = 0; pos < res.order.size(); ++pos) {
    const Bits v = vertex_set(simplices[res.order[pos]]);
    std::vector<Bits> facets;
    std::vector<Bits> meets;
    for (const Bits& w : placed) {
      Bits common = v & w;
      const std::size_t k = common.count();
      if (k == 0) continue;
      if (k == static_cast<std::size_t>(n) &&
          std::find(facets.begin(), facets.end(), common) == facets.end()) {
        facets.push_back(common);
      }
      meets.push_back(std::move(common));
    }
    const bool ok = std::all_of(meets.begin(), meets.end(), [&](const Bits& m) {
      return std::any_of(facets.begin(), facets.end(), [&](const Bits& f) { return m.is_subset_of(f); });
    });
    if (!ok && res.is_shelling) {
      res.is_shelling = false;
      res.first_failure = pos;
    }
    res.shared_facets.push_back(static_cast<int>(facets.size()));
    placed.push_back(v);
  }
  res.h = Polynomial::from_values(res.shared_facets);
  return res;
}

inline ShellingResult check_shelling(int n, ShellingDirection direction) {
  const std::vector<Clique> cliques = enumerate_cliques(n);
  const DualGraph g = embed(build_dual_from_cliques(n, cliques));
  std::vector<Clique> by_node(g.nodes.size());
  for (const Clique& c : cliques) by_node[g.index_of(clique_to_flow(n, c))] = c;
  return check_shelling(by_node, g, direction);
}

}  // namespace zzflow
