#pragma once

// Slow, independent recomputations used to cross-check the production
// paths. Nothing here is called by the enumeration code itself.

#include <cstddef>
#include <functional>
#include <vector>

#include "zzflow/ehrhart.hpp"
#include "zzflow/graph.hpp"

namespace zzflow::oracle {

/// Routes counted by position: paths into v arrive from v-1 (one or two
/// parallel edges) and from v-2 (one skip edge).
inline BigInt route_count(int n) {
  require_graph_size(n);
  std::vector<BigInt> into(static_cast<std::size_t>(n + 1), 0);
  into[1] = 1;
  for (int v = 2; v <= n; ++v) {
    const bool doubled = v == 2 || v == n;  // x_1 | y_0 and x_{n-1} | y_{n-1}
    into[static_cast<std::size_t>(v)] = into[static_cast<std::size_t>(v - 1)] * (doubled ? 2 : 1);
    if (v >= 3) into[static_cast<std::size_t>(v)] += into[static_cast<std::size_t>(v - 2)];
  }
  return into[static_cast<std::size_t>(n)];
}

/// Alternating permutations of [n] counted with the Entringer triangle.
inline BigInt euler_zigzag(int n) {
  std::vector<std::vector<BigInt>> e(static_cast<std::size_t>(n + 1));
  e[0] = {1};
  for (int m = 1; m <= n; ++m) {
    auto& row = e[static_cast<std::size_t>(m)];
    row.assign(static_cast<std::size_t>(m + 1), 0);
    for (int k = 1; k <= m; ++k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] +
          e[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - k)];
    }
  }
  return e[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

/// Lattice points of the t-th dilate by trying every assignment in
/// {0..t}^E and testing conservation. Exponential; desk-sized inputs only.
inline BigInt lattice_count_brute_force(int n, int t) {
  require_graph_size(n);
  const std::vector<Edge> edges = all_edges(n);
  std::vector<int> net(static_cast<std::size_t>(n + 1), 0);  // out - in
  BigInt total = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == edges.size()) {
      bool ok = net[1] == t && net[static_cast<std::size_t>(n)] == -t;
      for (int v = 2; ok && v <= n - 1; ++v) ok = net[static_cast<std::size_t>(v)] == 0;
      if (ok) total += 1;
      return;
    }
    auto [tail, head] = edge_endpoints(n, edges[k]);
    for (int amount = 0; amount <= t; ++amount) {
      net[static_cast<std::size_t>(tail)] += amount;
      net[static_cast<std::size_t>(head)] -= amount;
      assign(k + 1);
      net[static_cast<std::size_t>(tail)] -= amount;
      net[static_cast<std::size_t>(head)] += amount;
    }
  };
  assign(0);
  return total;
}

}  // namespace zzflow::oracle
