#pragma once

// The contracted zigzag graph on vertices 1..n:
//
//   slack edges     x_i : i -> i+1        1 <= i <= n-1
//   nonslack edges  y_0 : 1 -> 2
//                   y_i : i -> i+2        1 <= i <= n-2
//                   y_{n-1} : n-1 -> n
//
// Every inner vertex i (2..n-1) has In(i) = {y_{i-2}, x_{i-1}} and
// Out(i) = {x_i, y_i}. The length-reverse-length framing orders incoming
// edges nonslack first and outgoing edges slack first.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zzflow/error.hpp"

namespace zzflow {

inline void require_graph_size(int n) {
  if (n < 3) {
    throw InvalidArgument("graph size must be at least 3, got " + std::to_string(n));
  }
}

inline bool is_inner(int n, int v) { return v >= 2 && v <= n - 1; }

inline void require_inner(int n, int v) {
  if (!is_inner(n, v)) {
    throw InvalidArgument("vertex " + std::to_string(v) + " is not an inner vertex for n=" +
                          std::to_string(n));
  }
}

enum class EdgeKind : std::uint8_t { slack, nonslack };

// Ordered by (kind, index): slack before nonslack, which is also the
// canonical route ordering (x before y at each choice, y_0 before y_1).
struct Edge {
  EdgeKind kind = EdgeKind::slack;
  int index = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr Edge slack(int i) { return {EdgeKind::slack, i}; }
inline constexpr Edge nonslack(int i) { return {EdgeKind::nonslack, i}; }

inline bool edge_valid(int n, Edge e) {
  if (e.kind == EdgeKind::slack) return e.index >= 1 && e.index <= n - 1;
  return e.index >= 0 && e.index <= n - 1;
}

inline std::string edge_label(Edge e) {
  return (e.kind == EdgeKind::slack ? "x" : "y") + std::to_string(e.index);
}

/// Returns (tail, head). Throws InvalidEdge when the index is out of range for n.
inline std::pair<int, int> edge_endpoints(int n, Edge e) {
  if (!edge_valid(n, e)) {
    throw InvalidEdge("edge " + edge_label(e) + " does not exist for n=" + std::to_string(n));
  }
  if (e.kind == EdgeKind::slack) return {e.index, e.index + 1};
  if (e.index == 0) return {1, 2};
  if (e.index == n - 1) return {n - 1, n};
  return {e.index, e.index + 2};
}

inline int edge_count(int n) { return 2 * n - 1; }

inline std::vector<Edge> all_edges(int n) {
  require_graph_size(n);
  std::vector<Edge> edges;
  for (int i = 1; i <= n - 1; ++i) edges.push_back(slack(i));
  for (int i = 0; i <= n - 1; ++i) edges.push_back(nonslack(i));
  return edges;
}

/// Outgoing edges in framing order. For the source: x_1, y_0, y_1.
inline std::vector<Edge> out_edges(int n, int v) {
  if (v == 1) return {slack(1), nonslack(0), nonslack(1)};
  require_inner(n, v);
  return {slack(v), nonslack(v)};
}

/// Incoming edges of an inner vertex in framing order (nonslack first).
inline std::array<Edge, 2> in_edges(int n, int v) {
  require_inner(n, v);
  return {nonslack(v == 2 ? 0 : v - 2), slack(v - 1)};
}

// Position of an edge in the incoming / outgoing framing order at its
// head / tail. Only meaningful at inner vertices.
inline int in_rank(Edge e) { return e.kind == EdgeKind::nonslack ? 0 : 1; }
inline int out_rank(Edge e) { return e.kind == EdgeKind::slack ? 0 : 1; }

inline std::optional<Edge> parse_edge(std::string_view label) {
  if (label.size() < 2 || (label[0] != 'x' && label[0] != 'y')) return std::nullopt;
  int index = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    index = index * 10 + (c - '0');
    if (index > 1'000'000) return std::nullopt;
  }
  return Edge{label[0] == 'x' ? EdgeKind::slack : EdgeKind::nonslack, index};
}

/// A directed path in the graph for a fixed n. Prefixes (1 -> i), suffixes
/// (i -> n) and routes (1 -> n) are all Paths. Immutable once built.
class Path {
 public:
  Path() = default;

  Path(int n, int start, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)), vertices_() {
    require_graph_size(n);
    if (start < 1 || start > n) throw InvalidArgument("path start out of range");
    vertices_.reserve(edges_.size() + 1);
    vertices_.push_back(start);
    for (Edge e : edges_) {
      auto [tail, head] = edge_endpoints(n, e);
      if (tail != vertices_.back()) {
        throw InvalidArgument("edge " + edge_label(e) + " does not continue a path at vertex " +
                              std::to_string(vertices_.back()));
      }
      vertices_.push_back(head);
    }
  }

  // Start vertex is implied by the first edge.
  Path(int n, const std::vector<Edge>& edges)
      : Path(n, edges.empty() ? 1 : edge_endpoints(n, edges.front()).first, edges) {}

  int graph_size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& vertices() const { return vertices_; }
  int tail() const { return vertices_.front(); }
  int head() const { return vertices_.back(); }
  std::size_t size() const { return edges_.size(); }
  bool is_route() const { return !vertices_.empty() && tail() == 1 && head() == n_; }

  /// Index into vertices() of v, if the path passes through v.
  std::optional<std::size_t> position(int v) const {
    // Vertices are strictly increasing along any path.
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  bool visits(int v) const { return position(v).has_value(); }

  Path prefix_to(int v) const {
    auto pos = position(v);
    if (!pos) throw InvalidArgument("path does not visit vertex " + std::to_string(v));
    return Path(n_, tail(), {edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(*pos)});
  }

  Path suffix_from(int v) const {
    auto pos = position(v);
    if (!pos) throw InvalidArgument("path does not visit vertex " + std::to_string(v));
    return Path(n_, v, {edges_.begin() + static_cast<std::ptrdiff_t>(*pos), edges_.end()});
  }

  /// The edge leaving v along this path, if any.
  std::optional<Edge> edge_after(int v) const {
    auto pos = position(v);
    if (!pos || *pos >= edges_.size()) return std::nullopt;
    return edges_[*pos];
  }

  std::string str() const {
    std::string s;
    for (Edge e : edges_) s += edge_label(e);
    return s;
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.n_ == b.n_ && a.vertices_.front() == b.vertices_.front() && a.edges_ == b.edges_;
  }
  // Lexicographic on edges; for routes this is the canonical enumeration order.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.tail() <=> b.tail(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                                  b.edges_.begin(), b.edges_.end());
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> vertices_{1};
};

using Route = Path;

/// Parses concatenated labels such as "y0x2y3".
inline Path parse_path(int n, std::string_view text) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  while (k < text.size()) {
    std::size_t end = k + 1;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    auto e = parse_edge(text.substr(k, end - k));
    if (!e) throw InvalidArgument("cannot parse path '" + std::string(text) + "'");
    edges.push_back(*e);
    k = end;
  }
  if (edges.empty()) throw InvalidArgument("empty path text");
  return Path(n, std::move(edges));
}

inline Route parse_route(int n, std::string_view text) {
  Path p = parse_path(n, text);
  if (!p.is_route()) throw InvalidArgument("'" + std::string(text) + "' is not a 1->n route");
  return p;
}

/// Every source-to-sink path, in canonical order.
inline std::vector<Route> enumerate_routes(int n) {
  require_graph_size(n);
  std::vector<Route> routes;
  std::vector<Edge> stack;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      routes.emplace_back(n, 1, stack);
      return;
    }
    for (Edge e : out_edges(n, v)) {
      stack.push_back(e);
      self(self, edge_endpoints(n, e).second);
      stack.pop_back();
    }
  };
  dfs(dfs, 1);
  return routes;
}

enum class PathEnd : std::uint8_t { prefix, suffix };

/// Total order the framing induces on prefixes arriving at i (resp. suffixes
/// leaving i). Prefixes are compared at the last vertex where they merge,
/// suffixes at the first vertex where they split.
inline std::strong_ordering framed_compare(int n, int i, PathEnd kind, const Path& a,
                                           const Path& b) {
  require_inner(n, i);
  auto incident = [&](const Path& p) {
    if (p.graph_size() != n) return false;
    if (kind == PathEnd::prefix) return p.tail() == 1 && p.head() == i;
    return p.tail() == i && p.head() == n;
  };
  if (!incident(a) || !incident(b)) {
    throw InvalidArgument(std::string(kind == PathEnd::prefix ? "prefix" : "suffix") +
                          " is not incident to vertex " + std::to_string(i));
  }
  const auto& ea = a.edges();
  const auto& eb = b.edges();
  if (kind == PathEnd::prefix) {
    auto ia = ea.rbegin();
    auto ib = eb.rbegin();
    while (ia != ea.rend() && ib != eb.rend() && *ia == *ib) {
      ++ia;
      ++ib;
    }
    if (ia == ea.rend() && ib == eb.rend()) return std::strong_ordering::equal;
    return in_rank(*ia) <=> in_rank(*ib);
  }
  std::size_t k = 0;
  while (k < ea.size() && k < eb.size() && ea[k] == eb[k]) ++k;
  if (k == ea.size() && k == eb.size()) return std::strong_ordering::equal;
  return out_rank(ea[k]) <=> out_rank(eb[k]);
}

/// DOT digraph with vertices 1..n and labeled edges.
inline std::string graph_to_dot(int n) {
  require_graph_size(n);
  std::ostringstream out;
  out << "digraph zigzag_" << n << " {\n  rankdir=LR;\n";
  for (int v = 1; v <= n; ++v) out << "  " << v << ";\n";
  for (Edge e : all_edges(n)) {
    auto [t, h] = edge_endpoints(n, e);
    out << "  " << t << " -> " << h << " [label=\"" << edge_label(e) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace zzflow
