#pragma once

// Groves: one noncrossing bipartite tree per inner vertex. Each tree has
// left vertices l_1..l_p (bottom to top) and two right vertices, r_1 for x_i
// and r_2 for y_i. With two right vertices a noncrossing tree is fixed by
// its degrees: r_1 ~ l_1..l_{d1}, r_2 ~ l_{d1}..l_p, and l_{d1} is the only
// left vertex touching both. So a tree is stored as the triple (p, d1, d2).
//
// Left vertices of tree i arrive in two groups, bottom first (incoming
// framing is nonslack first): the edges of r_2 in tree i-2 (via y_{i-2}) and
// then the edges of r_1 in tree i-1 (via x_{i-1}). Each group keeps its
// internal bottom-to-top order.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/graph.hpp"

namespace zzflow {

struct Tree {
  int left = 0;       // p: number of left vertices
  int slack_deg = 0;  // d1: degree of r_1 (edge x_i)
  int nonslack_deg = 0;  // d2: degree of r_2 (edge y_i)

  friend auto operator<=>(const Tree&, const Tree&) = default;
};

struct Grove {
  int n = 0;
  std::vector<Tree> trees;  // trees[0] is tree 2

  const Tree& tree(int i) const { return trees.at(static_cast<std::size_t>(i - 2)); }
  Tree& tree(int i) { return trees.at(static_cast<std::size_t>(i - 2)); }

  // Sizes of the arriving groups at tree i.
  int bottom_group(int i) const { return i >= 4 ? tree(i - 2).nonslack_deg : 1; }
  int top_group(int i) const { return i >= 3 ? tree(i - 1).slack_deg : 1; }

  friend auto operator<=>(const Grove&, const Grove&) = default;
};

inline std::string grove_violation(const Grove& g) {
  if (g.n < 3) return "graph size must be at least 3";
  if (g.trees.size() != static_cast<std::size_t>(g.n - 2)) return "grove must have n-2 trees";
  for (int i = 2; i <= g.n - 1; ++i) {
    const Tree& t = g.tree(i);
    const std::string at = " in tree " + std::to_string(i);
    if (t.slack_deg < 1 || t.nonslack_deg < 1) return "right vertex of degree 0" + at;
    if (t.slack_deg + t.nonslack_deg != t.left + 1) return "not a tree (d1 + d2 != p + 1)" + at;
    if (t.left != g.bottom_group(i) + g.top_group(i)) return "left count mismatch" + at;
  }
  return {};
}

inline void require_valid(const Grove& g) {
  if (auto why = grove_violation(g); !why.empty()) throw MalformedGrove("invalid grove: " + why);
}

/// All groves, sorted, built tree by tree: the left count of tree i is fixed
/// by the earlier trees and any split d1 + d2 = p + 1 with both >= 1 is a
/// noncrossing tree.
inline std::vector<Grove> enumerate_groves(int n) {
  require_graph_size(n);
  std::vector<Grove> out;
  Grove g{n, std::vector<Tree>(static_cast<std::size_t>(n - 2))};
  auto place = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(g);
      return;
    }
    const int p = g.bottom_group(i) + g.top_group(i);
    for (int d1 = 1; d1 <= p; ++d1) {
      g.tree(i) = {p, d1, p + 1 - d1};
      self(self, i + 1);
    }
  };
  place(place, 2);
  std::sort(out.begin(), out.end());
  return out;
}

/// Degrees are flow + 1.
inline Grove grove_from_flow(const IntegerFlow& f) {
  require_valid(f);
  Grove g{f.n, {}};
  for (int i = 2; i <= f.n - 1; ++i) {
    g.trees.push_back({f.x(i) + f.y(i) + 1, f.x(i) + 1, f.y(i) + 1});
  }
  return g;
}

inline IntegerFlow flow_from_grove(const Grove& g) {
  require_valid(g);
  IntegerFlow f{g.n, std::vector<int>(static_cast<std::size_t>(g.n - 1), 0),
                std::vector<int>(static_cast<std::size_t>(g.n), 0)};
  for (int i = 2; i <= g.n - 1; ++i) {
    f.x(i) = g.tree(i).slack_deg - 1;
    f.y(i) = g.tree(i).nonslack_deg - 1;
  }
  return f;
}

enum class RightVertex : std::uint8_t { slack, nonslack };

struct TrackOutcome {
  bool trackable = true;
  int stuck_at = 0;  // tree whose arriving left vertex touches both right vertices

  friend bool operator==(const TrackOutcome&, const TrackOutcome&) = default;
};

/// Tracks the edge between left vertex `left_index` (1-based, bottom up) and
/// right vertex `side` of tree i through the later trees.
inline TrackOutcome track_edge(const Grove& g, int i, int left_index, RightVertex side) {
  require_inner(g.n, i);
  const Tree& t0 = g.tree(i);
  const bool exists = side == RightVertex::slack ? left_index >= 1 && left_index <= t0.slack_deg
                                                 : left_index >= t0.slack_deg && left_index <= t0.left;
  if (!exists) throw InvalidArgument("no such edge in tree " + std::to_string(i));

  int j = i;
  int q = left_index;
  RightVertex r = side;
  for (;;) {
    const Tree& t = g.tree(j);
    // Rank of the edge among those at its right vertex, bottom = 1.
    const int rank = r == RightVertex::slack ? q : q - t.slack_deg + 1;
    const int target = r == RightVertex::slack ? j + 1 : std::min(j + 2, g.n);
    if (target == g.n) return {true, 0};
    q = r == RightVertex::slack ? g.bottom_group(target) + rank : rank;
    j = target;
    const Tree& next = g.tree(j);
    if (q == next.slack_deg) return {false, j};
    r = q < next.slack_deg ? RightVertex::slack : RightVertex::nonslack;
  }
}

/// Tracks the topmost edge at r_1 of tree i.
inline TrackOutcome track_top_r1(const Grove& g, int i) {
  require_inner(g.n, i);
  return track_edge(g, i, g.tree(i).slack_deg, RightVertex::slack);
}

/// Sequence of offsets of a grove at i, read off while tracking the topmost
/// r_1 edge of tree i: negative when the arrival touches only r_1 (minus the
/// number of r_1 edges above it), positive when it touches only r_2 (the
/// number of r_2 edges below it, followed by a bypass marker), and zeros to
/// the end once an arrival touches both.
inline OffsetSeq grove_offsets(const Grove& g, int i) {
  require_inner(g.n, i);
  const int n = g.n;
  OffsetSeq z{i + 1, {}};
  if (i == n - 1) return z;
  auto record = [&](std::optional<int> v) { z.entries.push_back(v); };

  int j = i + 1;
  int q = g.bottom_group(j) + g.tree(i).slack_deg;  // arrives on top of the x_i group
  for (;;) {
    const Tree& t = g.tree(j);
    if (q == t.slack_deg) {
      for (int k = j; k <= n - 1; ++k) record(0);
      break;
    }
    if (q < t.slack_deg) {
      record(-(t.slack_deg - q));
      if (j == n - 1) break;
      const int next = j + 1;
      q = g.bottom_group(next) + q;
      j = next;
    } else {
      const int below = q - t.slack_deg;
      record(below);
      if (j <= n - 2) record(std::nullopt);
      if (j >= n - 2) break;
      q = below + 1;
      j += 2;
    }
  }
  return z;
}

/// S-to-Z move on groves. For +: in tree i the shared left vertex l_j
/// (j = d1) must not be the bottom one; l_j r_1 becomes l_{j-1} r_2. When
/// i < n-1 the top left vertex of tree i+1 must touch only r_2 and is
/// removed. When i < n-2 a new bottom left vertex joined to r_1 is added to
/// tree i+2. The - move is the inverse.
inline std::optional<Grove> grove_move(const Grove& g, int i, Sign sign) {
  require_inner(g.n, i);
  const int n = g.n;
  Grove h = g;
  if (sign == Sign::plus) {
    Tree& a = h.tree(i);
    if (a.slack_deg < 2) return std::nullopt;
    if (i < n - 1 && h.tree(i + 1).nonslack_deg < 2) return std::nullopt;
    a = {a.left, a.slack_deg - 1, a.nonslack_deg + 1};
    if (i < n - 1) {
      Tree& b = h.tree(i + 1);
      b = {b.left - 1, b.slack_deg, b.nonslack_deg - 1};
    }
    if (i < n - 2) {
      Tree& c = h.tree(i + 2);
      c = {c.left + 1, c.slack_deg + 1, c.nonslack_deg};
    }
  } else {
    Tree& a = h.tree(i);
    if (a.nonslack_deg < 2) return std::nullopt;
    if (i < n - 2 && h.tree(i + 2).slack_deg < 2) return std::nullopt;
    a = {a.left, a.slack_deg + 1, a.nonslack_deg - 1};
    if (i < n - 1) {
      Tree& b = h.tree(i + 1);
      b = {b.left + 1, b.slack_deg, b.nonslack_deg + 1};
    }
    if (i < n - 2) {
      Tree& c = h.tree(i + 2);
      c = {c.left - 1, c.slack_deg - 1, c.nonslack_deg};
    }
  }
  return h;
}

}  // namespace zzflow
