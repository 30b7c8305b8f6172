#pragma once

// Alternating permutations and the two permutation-side statistics:
//  - swap on alternating permutations, read off the inverse;
//  - des on the cyclic permutation built from an integer flow.
// Also the planar-drawing construction that turns an alternating
// permutation into a maximal clique of routes.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zzflow/clique.hpp"
#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/graph.hpp"

namespace zzflow {

using Permutation = std::vector<int>;  // one-line notation, values 1..n

inline std::string perm_str(const Permutation& p) {
  std::string s;
  for (int v : p) s += std::to_string(v);
  return s;
}

inline Permutation parse_perm(const std::string& text) {
  Permutation p;
  for (char c : text) {
    if (c < '1' || c > '9') throw InvalidArgument("permutation digits must be 1..9: " + text);
    p.push_back(c - '0');
  }
  return p;
}

inline bool is_permutation_of_n(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

/// a_1 < a_2 > a_3 < a_4 > ...
inline bool is_alternating(const Permutation& p) {
  if (!is_permutation_of_n(p)) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const bool rise = p[k] < p[k + 1];
    if (rise != (k % 2 == 0)) return false;
  }
  return true;
}

inline std::vector<Permutation> alternating_perms(int n) {
  if (n < 1) throw InvalidArgument("permutation length must be positive");
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    if (is_alternating(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Permutation inverse(const Permutation& p) {
  if (!is_permutation_of_n(p)) throw InvalidArgument("not a permutation: " + perm_str(p));
  Permutation inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    inv[static_cast<std::size_t>(p[k] - 1)] = static_cast<int>(k) + 1;
  }
  return inv;
}

inline void require_alternating(const Permutation& p) {
  if (!is_alternating(p)) throw InvalidArgument("not an alternating permutation: " + perm_str(p));
}

/// Number of k with b_k < b_{k+1} - 1, where b is the inverse.
inline int swap_stat(const Permutation& alpha) {
  require_alternating(alpha);
  const Permutation beta = inverse(alpha);
  int count = 0;
  for (std::size_t k = 0; k + 1 < beta.size(); ++k) {
    if (beta[k] < beta[k + 1] - 1) ++count;
  }
  return count;
}

/// Route cut out of the planar drawing by labelling regions 1..n "below the
/// path" exactly when they are in `below`. Regions: 1 is the bigon
/// (y_0, x_1), j in 2..n-1 is the triangle (x_{j-1}, x_j, y_{j-1}), n is the
/// bigon (x_{n-1}, y_{n-1}). An edge is used when the faces on its two sides
/// get different labels. x_j separates regions j and j+1; y_{j-1} separates
/// region j from the outer face, which is the lower one for odd j and the
/// upper one for even j. Returns nullopt when the used edges are not a
/// single 1 -> n path.
inline std::optional<Route> route_from_region_set(int n, const std::set<int>& below) {
  require_graph_size(n);
  for (int r : below) {
    if (r < 1 || r > n) throw InvalidArgument("region " + std::to_string(r) + " outside 1..n");
  }
  auto is_below = [&](int region) { return below.count(region) > 0; };
  std::vector<Edge> used;
  for (int j = 1; j <= n - 1; ++j) {
    if (is_below(j) != is_below(j + 1)) used.push_back(slack(j));
  }
  for (int j = 1; j <= n; ++j) {
    const bool outer_below = j % 2 == 1;
    if (is_below(j) != outer_below) used.push_back(nonslack(j - 1));
  }
  std::vector<Edge> walk;
  int v = 1;
  while (v != n) {
    std::optional<Edge> next;
    for (Edge e : used) {
      if (edge_endpoints(n, e).first != v) continue;
      if (next) return std::nullopt;  // branches
      next = e;
    }
    if (!next) return std::nullopt;  // dead end
    walk.push_back(*next);
    v = edge_endpoints(n, *next).second;
  }
  if (walk.size() != used.size()) return std::nullopt;  // stray edges
  return Route(n, 1, std::move(walk));
}

/// Clique {P_0, ..., P_n}: P_k is cut out by regions beta_1..beta_k, with
/// beta the inverse of alpha.
inline Clique alt_perm_to_clique(const Permutation& alpha) {
  require_alternating(alpha);
  const int n = static_cast<int>(alpha.size());
  require_graph_size(n);
  const Permutation beta = inverse(alpha);
  std::set<int> regions;
  std::vector<Route> routes;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) regions.insert(beta[static_cast<std::size_t>(k - 1)]);
    auto r = route_from_region_set(n, regions);
    if (!r) {
      throw ConsistencyFault("region set " + std::to_string(k) + " of " + perm_str(alpha) +
                             " does not cut out a route");
    }
    routes.push_back(*r);
  }
  Clique c = make_clique(n, std::move(routes));
  if (c.routes.size() != static_cast<std::size_t>(n + 1)) {
    throw ConsistencyFault("repeated route in the clique of " + perm_str(alpha));
  }
  return c;
}

/// Circular arrangement of 0..n, stored starting at 0.
struct CyclicPerm {
  std::vector<int> circle;

  /// Linear reading after 0, without the 0.
  Permutation linear() const { return {circle.begin() + 1, circle.end()}; }

  friend bool operator==(const CyclicPerm&, const CyclicPerm&) = default;
};

/// Start from the circle (0 1 2); for j = 3..n insert j after skipping
/// phi(y_{j-1}) elements clockwise from just after j-1. (With nonslack edges
/// renumbered y_1..y_n this is the count on the j-th nonslack edge.)
inline CyclicPerm flow_to_cyclic(const IntegerFlow& f) {
  require_valid(f);
  std::vector<int> circle{0, 1, 2};
  for (int j = 3; j <= f.n; ++j) {
    const auto m = circle.size();
    const auto at = static_cast<std::size_t>(std::find(circle.begin(), circle.end(), j - 1) -
                                             circle.begin());
    const std::size_t after = (at + static_cast<std::size_t>(f.y(j - 1))) % m;
    circle.insert(circle.begin() + static_cast<std::ptrdiff_t>(after) + 1, j);
  }
  auto zero = std::find(circle.begin(), circle.end(), 0);
  std::rotate(circle.begin(), zero, circle.end());
  return {circle};
}

inline int des_stat(const Permutation& pi) {
  int count = 0;
  for (std::size_t k = 0; k + 1 < pi.size(); ++k) {
    if (pi[k] > pi[k + 1]) ++count;
  }
  return count;
}

}  // namespace zzflow
