#pragma once

// Integer flows on the contracted zigzag graph with net flow
// d = (0, 1, 1, ..., 1, -(n-2)): every inner vertex creates one unit and the
// sink absorbs them all. Edges out of the source carry nothing.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzflow/error.hpp"
#include "zzflow/graph.hpp"

namespace zzflow {

struct IntegerFlow {
  int n = 0;
  std::vector<int> xs;  // x_1 .. x_{n-1}
  std::vector<int> ys;  // y_0 .. y_{n-1}

  int x(int i) const { return xs.at(static_cast<std::size_t>(i - 1)); }
  int y(int i) const { return ys.at(static_cast<std::size_t>(i)); }
  int& x(int i) { return xs.at(static_cast<std::size_t>(i - 1)); }
  int& y(int i) { return ys.at(static_cast<std::size_t>(i)); }

  int on(Edge e) const { return e.kind == EdgeKind::slack ? x(e.index) : y(e.index); }

  // Lexicographic on the concatenated (x, y) vectors.
  friend auto operator<=>(const IntegerFlow&, const IntegerFlow&) = default;
};

/// Empty string when valid, otherwise the first violated condition.
inline std::string flow_violation(const IntegerFlow& f) {
  if (f.n < 3) return "graph size must be at least 3";
  if (f.xs.size() != static_cast<std::size_t>(f.n - 1)) return "x must have n-1 entries";
  if (f.ys.size() != static_cast<std::size_t>(f.n)) return "y must have n entries";
  for (int v : f.xs)
    if (v < 0) return "negative slack flow";
  for (int v : f.ys)
    if (v < 0) return "negative nonslack flow";
  if (f.x(1) != 0 || f.y(0) != 0 || f.y(1) != 0) return "edges out of vertex 1 must carry 0";
  for (int i = 2; i <= f.n - 1; ++i) {
    int in = f.x(i - 1) + f.y(i == 2 ? 0 : i - 2) + 1;
    if (in != f.x(i) + f.y(i)) return "conservation fails at vertex " + std::to_string(i);
  }
  return {};
}

inline void require_valid(const IntegerFlow& f) {
  if (auto why = flow_violation(f); !why.empty()) throw InvalidArgument("invalid flow: " + why);
}

/// The flow with everything on slack edges: x = (0, 1, ..., n-2), y = 0.
inline IntegerFlow base_flow(int n) {
  require_graph_size(n);
  IntegerFlow f{n, std::vector<int>(static_cast<std::size_t>(n - 1)),
                std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int i = 1; i <= n - 1; ++i) f.x(i) = i - 1;
  return f;
}

/// All flows, sorted. Assigns (x_i, y_i) vertex by vertex under conservation.
inline std::vector<IntegerFlow> enumerate_flows(int n) {
  require_graph_size(n);
  std::vector<IntegerFlow> out;
  IntegerFlow cur{n, std::vector<int>(static_cast<std::size_t>(n - 1), 0),
                  std::vector<int>(static_cast<std::size_t>(n), 0)};
  auto assign = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    int in = cur.x(i - 1) + cur.y(i == 2 ? 0 : i - 2) + 1;
    for (int a = 0; a <= in; ++a) {
      cur.x(i) = a;
      cur.y(i) = in - a;
      self(self, i + 1);
    }
  };
  assign(assign, 2);
  std::sort(out.begin(), out.end());
  return out;
}

enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Elementary move m_i^{+/-}. The + move trades one unit on x_i and y_{i+1}
/// for one unit on x_{i+2} and y_i; the - move is its inverse. Terms on
/// edges that do not exist (x_n, x_{n+1}, y_n) are ignored, both as
/// conditions and as updates. Returns nullopt when the move does not apply.
inline std::optional<IntegerFlow> flow_move(const IntegerFlow& f, int i, Sign sign) {
  require_inner(f.n, i);
  const int n = f.n;
  Edge lose[2] = {slack(i), nonslack(i + 1)};
  Edge gain[2] = {slack(i + 2), nonslack(i)};
  if (sign == Sign::minus) std::swap(lose, gain);
  for (Edge e : lose)
    if (edge_valid(n, e) && f.on(e) <= 0) return std::nullopt;
  IntegerFlow g = f;
  auto bump = [&](Edge e, int delta) {
    if (!edge_valid(n, e)) return;
    (e.kind == EdgeKind::slack ? g.x(e.index) : g.y(e.index)) += delta;
  };
  for (Edge e : lose) bump(e, -1);
  for (Edge e : gain) bump(e, +1);
  return g;
}

/// Offset sequence (z_{start}, ..., z_{start + size - 1}); an empty optional
/// is the bypass marker.
struct OffsetSeq {
  int start = 0;
  std::vector<std::optional<int>> entries;

  bool has_zero() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const std::optional<int>& z) { return z && *z == 0; });
  }

  friend bool operator==(const OffsetSeq&, const OffsetSeq&) = default;
};

inline std::string to_string(const OffsetSeq& z) {
  std::string s = "(";
  for (std::size_t k = 0; k < z.entries.size(); ++k) {
    if (k) s += ",";
    s += z.entries[k] ? std::to_string(*z.entries[k]) : std::string("none");
  }
  return s + ")";
}

/// Sequence of offsets of a flow at inner vertex i, indexed i+1 .. n-1.
inline OffsetSeq flow_offsets(const IntegerFlow& f, int i) {
  require_inner(f.n, i);
  const int n = f.n;
  OffsetSeq z{i + 1, {}};
  if (i == n - 1) return z;
  const int last = n - 1;
  std::vector<std::optional<int>> val(static_cast<std::size_t>(n + 1));
  std::vector<bool> defined(static_cast<std::size_t>(n + 1), false);
  auto set = [&](int j, std::optional<int> v) {
    if (j > last) return;
    val[static_cast<std::size_t>(j)] = v;
    defined[static_cast<std::size_t>(j)] = true;
  };
  set(i + 1, f.y(i + 1));
  int j = i + 1;
  while (j <= last) {
    int cur = *val[static_cast<std::size_t>(j)];
    if (cur == 0) {
      for (int k = j; k <= last; ++k) set(k, 0);
      break;
    }
    if (cur < 0) {
      if (j + 1 > last) break;
      set(j + 1, cur + f.y(j + 1));
      j += 1;
    } else {
      set(j + 1, std::nullopt);
      if (j >= n - 2) break;
      set(j + 2, cur - f.x(j + 2));
      j += 2;
    }
  }
  for (int k = i + 1; k <= last; ++k) {
    if (!defined[static_cast<std::size_t>(k)]) {
      throw ConsistencyFault("offset recursion left z_" + std::to_string(k) + " undefined");
    }
    z.entries.push_back(val[static_cast<std::size_t>(k)]);
  }
  return z;
}

}  // namespace zzflow
