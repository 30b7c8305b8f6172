#pragma once

// Exhaustive verification harness. Every check runs once per graph size and
// yields a CheckRecord. Theorem checks fail; conjecture checks report a
// finding; exploratory checks only leave a note. Report text is a pure
// function of the selected checks and sizes. Timings are kept on the side.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zzflow/cache.hpp"
#include "zzflow/clique.hpp"
#include "zzflow/dual_graph.hpp"
#include "zzflow/ehrhart.hpp"
#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/graph.hpp"
#include "zzflow/grove.hpp"
#include "zzflow/hstar.hpp"
#include "zzflow/oracles.hpp"
#include "zzflow/permutations.hpp"
#include "zzflow/serialize.hpp"
#include "zzflow/shelling.hpp"

namespace zzflow {

enum class CheckStatus { pass, fail, finding, note };
enum class CheckKind { theorem, conjecture, exploratory };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::finding: return "FINDING";
    case CheckStatus::note: return "NOTE";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  int n = 0;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // counterexample or summary
  double seconds = 0;
};

struct VerificationReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<CheckRecord> records;

  int count(CheckStatus s) const {
    return static_cast<int>(std::count_if(records.begin(), records.end(),
                                           [&](const CheckRecord& r) { return r.status == s; }));
  }

  int exit_status(bool findings_ok) const {
    if (count(CheckStatus::fail) > 0) return 1;
    if (count(CheckStatus::finding) > 0 && !findings_ok) return 1;
    return 0;
  }

  std::string summary() const {
    std::ostringstream os;
    os << "pass=" << count(CheckStatus::pass) << " fail=" << count(CheckStatus::fail)
       << " finding=" << count(CheckStatus::finding) << " note=" << count(CheckStatus::note);
    return os.str();
  }

  std::string text() const {
    std::ostringstream os;
    os << "zzflow verification report, n=" << n_min << ".." << n_max << ", " << records.size()
       << " checks\n";
    for (const CheckRecord& r : records) {
      std::string tag = to_string(r.status);
      tag.resize(8, ' ');
      os << tag << " n=" << r.n << (r.n < 10 ? "  " : " ") << r.name << ": " << r.detail << '\n';
    }
    os << "summary: " << summary() << '\n';
    return os.str();
  }

  Json json() const {
    Json recs = Json::array();
    for (const CheckRecord& r : records) {
      recs.push_back({{"name", r.name}, {"n", r.n}, {"status", to_string(r.status)}, {"detail", r.detail}});
    }
    return {{"n_min", n_min},
            {"n_max", n_max},
            {"records", recs},
            {"summary",
             {{"pass", count(CheckStatus::pass)},
              {"fail", count(CheckStatus::fail)},
              {"finding", count(CheckStatus::finding)},
              {"note", count(CheckStatus::note)}}}};
  }

  std::string timings() const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    for (const CheckRecord& r : records) os << r.seconds << "s n=" << r.n << ' ' << r.name << '\n';
    return os.str();
  }
};

/// Shared, lazily built data for one graph size. Safe to use from several
/// worker threads.
class Instance {
 public:
  Instance(int n, const EnumerationCache& cache) : n_(n), cache_(cache) { require_graph_size(n); }

  int n() const { return n_; }

  const std::vector<Route>& routes() { return get(routes_, [&] { return enumerate_routes(n_); }); }
  const std::vector<Clique>& cliques() { return get(cliques_, [&] { return cache_.cliques(n_); }); }
  const std::vector<IntegerFlow>& flows() { return get(flows_, [&] { return cache_.flows(n_); }); }
  const std::vector<Grove>& groves() { return get(groves_, [&] { return enumerate_groves(n_); }); }
  const Polynomial& hstar() { return get(hstar_, [&] { return hstar_ehrhart(n_); }); }

  /// Offset-criterion dual graph, embedded.
  const DualGraph& dual() {
    return get(dual_, [&] { return embed(build_dual(n_, DualMethod::flows)); });
  }

  const DualGraph& clique_dual() {
    return get(clique_dual_, [&] { return build_dual_from_cliques(n_, cliques()); });
  }

  /// by_node()[k] is the clique whose flow is node k of dual().
  const std::vector<Clique>& by_node() {
    return get(by_node_, [&] {
      const DualGraph& g = dual();
      std::vector<Clique> out(g.nodes.size());
      for (const Clique& c : cliques()) out[g.index_of(clique_to_flow(n_, c))] = c;
      return out;
    });
  }

 private:
  template <class T>
  struct Slot {
    std::once_flag once;
    std::optional<T> value;
  };

  template <class T, class F>
  const T& get(Slot<T>& slot, F make) {
    std::call_once(slot.once, [&] { slot.value = make(); });
    return *slot.value;
  }

  int n_;
  const EnumerationCache& cache_;
  Slot<std::vector<Route>> routes_;
  Slot<std::vector<Clique>> cliques_;
  Slot<std::vector<IntegerFlow>> flows_;
  Slot<std::vector<Grove>> groves_;
  Slot<Polynomial> hstar_;
  Slot<DualGraph> dual_;
  Slot<DualGraph> clique_dual_;
  Slot<std::vector<Clique>> by_node_;
};

struct Outcome {
  bool holds = true;
  std::string detail;
};

struct Check {
  std::string name;
  CheckKind kind = CheckKind::theorem;
  int min_n = 3;
  int max_n = 1000;
  std::function<Outcome(Instance&)> run;

  bool applies(int n) const { return n >= min_n && n <= max_n; }
};

namespace checks {

inline std::string num(const BigInt& v) { return v.str(); }

template <class T>
std::string num(const T& v) {
  return std::to_string(v);
}

inline Outcome count_outcome(const std::string& what, std::size_t bad, std::size_t total) {
  if (bad == 0) return {true, std::to_string(total) + " " + what + " checked"};
  return {false, std::to_string(bad) + " of " + std::to_string(total) + " " + what + " violate"};
}

inline Outcome route_count(Instance& in) {
  const BigInt want = oracle::route_count(in.n());
  const std::size_t got = in.routes().size();
  return {BigInt(got) == want, num(got) + " routes, recurrence gives " + num(want)};
}

/// framed_compare is a strict total order on the prefixes (suffixes) met at
/// each inner vertex: sorting with it and then comparing every pair in the
/// sorted list must give "less" in one direction and "greater" in the other.
inline Outcome framed_orders(Instance& in) {
  const int n = in.n();
  std::size_t sets = 0;
  for (int i = 2; i <= n - 1; ++i) {
    for (PathEnd kind : {PathEnd::prefix, PathEnd::suffix}) {
      std::set<Path> distinct;
      for (const Route& r : in.routes()) {
        if (!r.visits(i)) continue;
        distinct.insert(kind == PathEnd::prefix ? r.prefix_to(i) : r.suffix_from(i));
      }
      std::vector<Path> v(distinct.begin(), distinct.end());
      std::sort(v.begin(), v.end(),
                [&](const Path& a, const Path& b) { return framed_compare(n, i, kind, a, b) < 0; });
      for (std::size_t a = 0; a < v.size(); ++a) {
        if (framed_compare(n, i, kind, v[a], v[a]) != 0) return {false, "reflexivity fails at " + v[a].str()};
        for (std::size_t b = a + 1; b < v.size(); ++b) {
          if (framed_compare(n, i, kind, v[a], v[b]) >= 0 || framed_compare(n, i, kind, v[b], v[a]) <= 0) {
            return {false, "order not total at vertex " + std::to_string(i) + ": " + v[a].str() + " vs " +
                               v[b].str()};
          }
        }
      }
      ++sets;
    }
  }
  return {true, std::to_string(sets) + " prefix/suffix sets totally ordered"};
}

inline Outcome cardinality(const std::string& what, std::size_t got, int n) {
  const BigInt euler = oracle::euler_zigzag(n);
  std::string detail = num(got) + " " + what + ", zigzag number " + num(euler);
  bool ok = BigInt(got) == euler;
  if (n <= 10) {
    const std::size_t brute = alternating_perms(n).size();
    detail += ", alternating permutations " + num(brute);
    ok = ok && got == brute;
  }
  return {ok, detail};
}

inline Outcome clique_size(Instance& in) {
  std::size_t bad = 0;
  for (const Clique& c : in.cliques()) {
    if (c.routes.size() != static_cast<std::size_t>(in.n() + 1)) ++bad;
  }
  if (bad) return {false, std::to_string(bad) + " cliques without n+1 routes"};
  return {true, "all " + num(in.cliques().size()) + " cliques have " + num(in.n() + 1) + " routes"};
}

inline Outcome routes_covered(Instance& in) {
  std::set<Route> used;
  for (const Clique& c : in.cliques()) used.insert(c.routes.begin(), c.routes.end());
  for (const Route& r : in.routes()) {
    if (!used.count(r)) return {false, "route " + r.str() + " lies in no clique"};
  }
  return {true, "all " + num(in.routes().size()) + " routes used"};
}

inline Outcome clique_flow_bijection(Instance& in) {
  std::vector<IntegerFlow> image;
  for (const Clique& c : in.cliques()) image.push_back(clique_to_flow(in.n(), c));
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    return {false, "two cliques share a flow"};
  }
  if (image != in.flows()) return {false, "image differs from the set of integer flows"};
  return {true, num(image.size()) + " cliques map onto " + num(in.flows().size()) + " flows"};
}

inline Outcome clique_grove_flow(Instance& in) {
  std::vector<Grove> seen;
  for (const Clique& c : in.cliques()) {
    const Grove g = clique_to_grove(in.n(), c);
    if (flow_from_grove(g) != clique_to_flow(in.n(), c)) {
      return {false, "grove and flow of a clique disagree: " + to_json(c).dump()};
    }
    seen.push_back(g);
  }
  std::sort(seen.begin(), seen.end());
  if (seen != in.groves()) return {false, "clique groves differ from the enumerated groves"};
  return {true, num(seen.size()) + " cliques"};
}

inline Outcome grove_flow_roundtrip(Instance& in) {
  for (const IntegerFlow& f : in.flows()) {
    if (flow_from_grove(grove_from_flow(f)) != f) return {false, "flow " + to_json(f).dump()};
  }
  for (const Grove& g : in.groves()) {
    if (grove_from_flow(flow_from_grove(g)) != g) return {false, "grove " + to_json(g).dump()};
  }
  return {true, num(in.flows().size()) + " flows and " + num(in.groves().size()) + " groves"};
}

/// Rank of `p` among the distinct prefixes (suffixes) at i of `routes`.
inline int local_rank(int n, int i, PathEnd kind, const std::vector<Route>& routes, const Path& p) {
  std::set<Path> distinct;
  for (const Route& r : routes) {
    if (r.visits(i)) distinct.insert(kind == PathEnd::prefix ? r.prefix_to(i) : r.suffix_from(i));
  }
  return static_cast<int>(std::count_if(distinct.begin(), distinct.end(),
                                        [&](const Path& q) { return framed_compare(n, i, kind, q, p) < 0; }));
}

/// Adjacent cliques C, C' exchange routes P i Q and P' i Q'. Counts the
/// pairs for which no common inner vertex i has P, P' consecutive among the
/// prefixes at i and Q, Q' consecutive among the suffixes at i. With
/// `graph_wide` the orders range over all routes of the graph, otherwise
/// over the routes of C and C'.
inline std::size_t exchange_violations(Instance& in, bool graph_wide) {
  const int n = in.n();
  const DualGraph& g = in.clique_dual();
  std::vector<Clique> by_flow(g.nodes.size());
  for (const Clique& c : in.cliques()) by_flow[g.index_of(clique_to_flow(n, c))] = c;
  std::size_t bad = 0;
  for (const DualEdge& e : g.edges) {
    auto [r, s] = exchanged_routes(by_flow[e.from], by_flow[e.to]);
    std::vector<Route> pool = by_flow[e.from].routes;
    pool.push_back(s);
    const std::vector<Route>& scope = graph_wide ? in.routes() : pool;
    bool found = false;
    for (int i = 2; i <= n - 1 && !found; ++i) {
      if (!r.visits(i) || !s.visits(i)) continue;
      const int dp = local_rank(n, i, PathEnd::prefix, scope, r.prefix_to(i)) -
                     local_rank(n, i, PathEnd::prefix, scope, s.prefix_to(i));
      const int ds = local_rank(n, i, PathEnd::suffix, scope, r.suffix_from(i)) -
                     local_rank(n, i, PathEnd::suffix, scope, s.suffix_from(i));
      found = (dp == 1 || dp == -1) && (ds == 1 || ds == -1);
    }
    if (!found) ++bad;
  }
  return bad;
}

inline Outcome adjacent_exchange(Instance& in) {
  return count_outcome("adjacent pairs", exchange_violations(in, false), in.clique_dual().edges.size());
}

/// Same test with the orders taken over every route of the graph.
inline Outcome adjacent_exchange_graph_wide(Instance& in) {
  const std::size_t bad = exchange_violations(in, true);
  const std::size_t total = in.clique_dual().edges.size();
  return {bad == 0, std::to_string(total - bad) + " of " + std::to_string(total) +
                        " adjacent pairs consecutive in the graph-wide orders"};
}

inline Outcome adjacent_move(Instance& in) {
  const DualGraph& g = in.clique_dual();  // construction faults on a pair no move explains
  std::size_t bad = 0;
  for (const DualEdge& e : g.edges) {
    if (flow_move(g.nodes[e.from], e.move, Sign::plus) != g.nodes[e.to]) ++bad;
  }
  return count_outcome("adjacent clique pairs", bad, g.edges.size());
}

inline Outcome offset_criterion(Instance& in) {
  const DualGraph& a = in.dual();
  const DualGraph& b = in.clique_dual();
  if (a.nodes != b.nodes) return {false, "node sets differ"};
  if (a.edges != b.edges) {
    return {false, num(a.edges.size()) + " criterion edges vs " + num(b.edges.size()) + " clique edges"};
  }
  return {true, num(a.edges.size()) + " labeled edges agree"};
}

inline Outcome grid_embedding(Instance& in) {
  const DualGraph& g = in.dual();
  std::vector<Coordinate> sorted = g.coordinates;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return {false, "two simplices share a coordinate"};
  }
  if (g.coordinates[g.index_of(base_flow(g.n))] != Coordinate(static_cast<std::size_t>(g.n - 2), 0)) {
    return {false, "base flow not at the origin"};
  }
  std::size_t bad = 0;
  for (const DualEdge& e : g.edges) {
    Coordinate step = g.coordinates[e.to];
    for (std::size_t k = 0; k < step.size(); ++k) step[k] -= g.coordinates[e.from][k];
    Coordinate unit(step.size(), 0);
    unit[static_cast<std::size_t>(e.move - 2)] = 1;
    if (step != unit) ++bad;
  }
  if (bad) return {false, std::to_string(bad) + " edges are not unit steps along their axis"};
  return {true, num(g.nodes.size()) + " distinct points, " + num(g.edges.size()) + " unit steps"};
}

inline bool connected(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& links) {
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(nodes, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == nodes;
}

inline Outcome dual_connected(Instance& in) {
  const DualGraph& g = in.clique_dual();
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (const DualEdge& e : g.edges) links.emplace_back(e.from, e.to);
  const bool ok = connected(g.nodes.size(), links);
  return {ok, num(g.nodes.size()) + " simplices " + (ok ? "connected" : "disconnected")};
}

inline Outcome move_graph_connected(Instance& in) {
  const auto& flows = in.flows();
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (std::size_t a = 0; a < flows.size(); ++a) {
    for (int i = 2; i <= in.n() - 1; ++i) {
      if (auto b = flow_move(flows[a], i, Sign::plus)) {
        auto it = std::lower_bound(flows.begin(), flows.end(), *b);
        if (it == flows.end() || *it != *b) return {false, "a move leaves the set of flows"};
        links.emplace_back(a, static_cast<std::size_t>(it - flows.begin()));
      }
    }
  }
  const bool ok = connected(flows.size(), links);
  return {ok, num(links.size()) + " applicable + moves, " + (ok ? "connected" : "disconnected")};
}

inline Outcome moves_inverse(Instance& in) {
  std::size_t applied = 0;
  for (const IntegerFlow& f : in.flows()) {
    for (int i = 2; i <= in.n() - 1; ++i) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const auto img = flow_move(f, i, s);
        if (!img) continue;
        ++applied;
        const Sign back = s == Sign::plus ? Sign::minus : Sign::plus;
        if (!flow_violation(*img).empty() || flow_move(*img, i, back) != f) {
          return {false, "m_" + std::to_string(i) + sign_char(s) + " of " + to_json(f).dump()};
        }
      }
    }
  }
  return {true, num(applied) + " applicable moves undone"};
}

inline Outcome move_commutation(Instance& in) {
  std::size_t total = 0;
  for (const Grove& g : in.groves()) {
    const IntegerFlow f = flow_from_grove(g);
    for (int i = 2; i <= in.n() - 1; ++i) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        ++total;
        const auto gm = grove_move(g, i, s);
        const auto fm = flow_move(f, i, s);
        const bool same = gm ? fm && flow_from_grove(*gm) == *fm : !fm;
        if (!same) return {false, "m_" + std::to_string(i) + sign_char(s) + " on " + to_json(g).dump()};
      }
    }
  }
  return {true, num(total) + " (grove, i, sign) cases"};
}

inline Outcome offsets_agree(Instance& in) {
  std::size_t total = 0;
  for (const Grove& g : in.groves()) {
    const IntegerFlow f = flow_from_grove(g);
    for (int i = 2; i <= in.n() - 1; ++i) {
      ++total;
      const OffsetSeq a = grove_offsets(g, i);
      const OffsetSeq b = flow_offsets(f, i);
      if (a != b) {
        return {false, "i=" + std::to_string(i) + " grove " + to_string(a) + " flow " + to_string(b) +
                           " at " + to_json(g).dump()};
      }
    }
  }
  return {true, num(total) + " (grove, i) pairs"};
}

/// Entries run over i+1..n-1; a zero is followed only by zeros and the
/// first entry is never the bypass marker.
inline Outcome offset_shape(Instance& in) {
  std::size_t total = 0;
  for (const IntegerFlow& f : in.flows()) {
    for (int i = 2; i <= in.n() - 1; ++i) {
      ++total;
      const OffsetSeq z = flow_offsets(f, i);
      bool ok = z.start == i + 1 && z.entries.size() == static_cast<std::size_t>(in.n() - 1 - i);
      if (ok && !z.entries.empty()) ok = z.entries.front().has_value();
      bool zero = false;
      for (const auto& e : z.entries) {
        if (zero && (!e || *e != 0)) ok = false;
        if (e && *e == 0) zero = true;
      }
      if (!ok) return {false, "i=" + std::to_string(i) + " " + to_string(z) + " at " + to_json(f).dump()};
    }
  }
  return {true, num(total) + " sequences"};
}

inline Outcome tracking_vs_offsets(Instance& in) {
  std::size_t bad = 0;
  std::size_t total = 0;
  for (const Grove& g : in.groves()) {
    for (int i = 2; i <= in.n() - 1; ++i) {
      ++total;
      if (track_top_r1(g, i).trackable == grove_offsets(g, i).has_zero()) ++bad;
    }
  }
  return count_outcome("(grove, i) pairs", bad, total);
}

/// Each tree edge (prefix P, outgoing edge e) is trackable exactly when one
/// route of the clique starts with P e.
inline Outcome tracking_unique_route(Instance& in) {
  const int n = in.n();
  std::size_t bad = 0;
  std::size_t total = 0;
  for (const Clique& c : in.cliques()) {
    const Grove g = clique_to_grove(n, c);
    for (int i = 2; i <= n - 1; ++i) {
      const std::vector<Path> left = realized_prefixes(c, i);
      const Tree& t = g.tree(i);
      for (int q = 1; q <= t.left; ++q) {
        for (RightVertex side : {RightVertex::slack, RightVertex::nonslack}) {
          const bool present = side == RightVertex::slack ? q <= t.slack_deg : q >= t.slack_deg;
          if (!present) continue;
          ++total;
          const Edge e = side == RightVertex::slack ? slack(i) : nonslack(i);
          const bool unique = routes_extending(c, left[static_cast<std::size_t>(q - 1)], e) == 1;
          if (track_edge(g, i, q, side).trackable != unique) ++bad;
        }
      }
    }
  }
  return count_outcome("tree edges", bad, total);
}

inline Outcome degree_handshake(Instance& in) {
  const DualGraph& g = in.dual();
  std::size_t out = 0;
  std::size_t inn = 0;
  for (const DegreeStat& d : degree_stats(g)) {
    out += static_cast<std::size_t>(d.sz);
    inn += static_cast<std::size_t>(d.zs);
  }
  const bool ok = out == g.edges.size() && inn == g.edges.size();
  return {ok, "sum sz=" + num(out) + " sum zs=" + num(inn) + " edges=" + num(g.edges.size())};
}

inline Outcome hstar_volume(Instance& in) {
  const Polynomial& h = in.hstar();
  for (const BigInt& c : h.coeffs()) {
    if (c < 0) return {false, "negative coefficient in " + h.str()};
  }
  const bool ok = h.sum() == BigInt(in.flows().size());
  return {ok, "h*=" + h.str() + ", sum " + num(h.sum()) + ", flows " + num(in.flows().size())};
}

inline Outcome ehrhart_consistency(Instance& in) {
  const int n = in.n();
  for (int t = 0; t <= n + 2; ++t) {
    const BigInt direct = lattice_count(n, t);
    const BigInt fitted = ehrhart_value(in.hstar(), polytope_dimension(n), t);
    if (direct != fitted) return {false, "t=" + std::to_string(t) + ": " + num(direct) + " vs " + num(fitted)};
  }
  return {true, "L(t) matches for t=0.." + std::to_string(n + 2)};
}

inline Outcome lattice_direct(Instance& in) {
  const int n = in.n();
  if (lattice_count(n, 1) != BigInt(in.routes().size())) return {false, "L(1) differs from the route count"};
  std::string detail = "L(1)=" + num(in.routes().size());
  if (n <= 5) {
    for (int t = 0; t <= 2; ++t) {
      const BigInt dp = lattice_count(n, t);
      const BigInt brute = oracle::lattice_count_brute_force(n, t);
      if (dp != brute) return {false, "t=" + std::to_string(t) + ": " + num(dp) + " vs " + num(brute)};
    }
    detail += ", brute force agrees for t<=2";
  }
  return {true, detail};
}

inline Outcome stat_matches(Instance& in, Statistic stat) {
  Polynomial p;
  switch (stat) {
    case Statistic::sz:
      p = Polynomial::from_values(sz_values(in.dual()));
      break;
    case Statistic::zs:
      p = Polynomial::from_values(zs_values(in.dual()));
      break;
    case Statistic::swap:
    case Statistic::des:
      p = stat_polynomial(in.n(), stat);
      break;
  }
  const bool ok = p == in.hstar();
  return {ok, to_string(stat) + "=" + p.str() + (ok ? " equals" : " differs from") + " h*=" + in.hstar().str()};
}

inline Outcome alt_perm_flows(Instance& in) {
  const std::vector<StatRecord> rows = stat_table(in.n());  // faults on a repeated flow
  const bool ok = rows.size() == in.flows().size();
  return {ok, num(rows.size()) + " alternating permutations onto " + num(in.flows().size()) + " flows"};
}

inline Outcome shelling(Instance& in, ShellingDirection dir) {
  const ShellingResult r = check_shelling(in.by_node(), in.dual(), dir);
  if (!r.is_shelling) return {false, "not a shelling at position " + num(*r.first_failure)};
  const bool ok = r.h == in.hstar();
  return {ok, "shelling with h=" + r.h.str() + (ok ? " = h*" : " != h*=" + in.hstar().str())};
}

inline Outcome shelling_degrees(Instance& in) {
  const std::vector<DegreeStat> deg = degree_stats(in.dual());
  std::string detail;
  bool all = true;
  for (ShellingDirection dir : {ShellingDirection::forward, ShellingDirection::reverse}) {
    const ShellingResult r = check_shelling(in.by_node(), in.dual(), dir);
    std::size_t differ = 0;
    for (std::size_t k = 0; k < r.order.size(); ++k) {
      const DegreeStat& d = deg[r.order[k]];
      const int want = dir == ShellingDirection::forward ? d.zs : d.sz;
      if (r.shared_facets[k] != want) ++differ;
    }
    all = all && differ == 0;
    detail += std::string(detail.empty() ? "" : "; ") +
              (dir == ShellingDirection::forward ? "forward s vs zs: " : "reverse s vs sz: ") +
              (differ ? num(differ) + " simplices differ" : "equal");
  }
  return {all, detail};
}

// ---- worked examples -------------------------------------------------------

inline IntegerFlow flow_of(int n, std::vector<int> x, std::vector<int> y) {
  return IntegerFlow{n, std::move(x), std::move(y)};
}

inline Outcome worked_example_n4(Instance& in) {
  const int n = 4;
  std::vector<std::string> wrong;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) wrong.push_back(what);
  };
  expect(in.cliques().size() == 5 && in.groves().size() == 5 && in.flows().size() == 5, "counts");

  const Clique a_clique = make_clique(n, {parse_route(n, "x1x2x3"), parse_route(n, "y0x2x3"),
                                          parse_route(n, "y1x3"), parse_route(n, "x1x2y3"),
                                          parse_route(n, "x1y2")});
  expect(std::binary_search(in.cliques().begin(), in.cliques().end(), a_clique), "clique of A");
  const IntegerFlow a = flow_of(n, {0, 1, 2}, {0, 0, 0, 0});
  const IntegerFlow b = flow_of(n, {0, 1, 1}, {0, 0, 0, 1});
  const IntegerFlow c = flow_of(n, {0, 1, 0}, {0, 0, 0, 2});
  const IntegerFlow d = flow_of(n, {0, 0, 1}, {0, 0, 1, 0});
  const IntegerFlow e = flow_of(n, {0, 0, 0}, {0, 0, 1, 1});
  expect(clique_to_flow(n, a_clique) == a && a == base_flow(n), "flow of A");
  expect(clique_to_grove(n, a_clique) == Grove{n, {{2, 2, 1}, {3, 3, 1}}}, "grove of A");
  expect(flow_move(a, 3, Sign::plus) == b, "m3+(A)=B");
  expect(flow_move(b, 2, Sign::plus) == d, "m2+(B)=D");
  expect(flow_move(b, 3, Sign::plus) == c, "m3+(B)=C");
  expect(!flow_move(b, 2, Sign::minus).has_value(), "m2-(B) not applicable");

  const DualGraph& g = in.dual();
  expect(g.edges.size() == 5, "five dual edges");
  // Coordinates as printed, compared up to a permutation of the two axes.
  std::map<IntegerFlow, Coordinate> printed{
      {a, {0, 0}}, {b, {1, 0}}, {c, {2, 0}}, {d, {1, 1}}, {e, {2, 1}}};
  bool some_axis_order = false;
  for (bool swap_axes : {false, true}) {
    bool all = true;
    for (const auto& [f, p] : printed) {
      Coordinate q = swap_axes ? Coordinate{p[1], p[0]} : p;
      auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), f);
      all = all && it != g.nodes.end() && *it == f &&
            g.coordinates[static_cast<std::size_t>(it - g.nodes.begin())] == q;
    }
    some_axis_order = some_axis_order || all;
  }
  expect(some_axis_order, "grid coordinates");

  if (!wrong.empty()) {
    std::string s = "mismatch:";
    for (const auto& w : wrong) s += " [" + w + "]";
    return {false, s};
  }
  return {true, "cliques, flows, groves, moves, dual edges and coordinates as worked out"};
}

inline Outcome table_n5(Instance& in) {
  const std::vector<StatRecord> rows = stat_table(5);
  std::vector<std::string> wrong;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) wrong.push_back(what);
  };
  expect(rows.size() == 16, "16 records");
  const Polynomial want = Polynomial::from_values({0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3});
  std::vector<int> sw, sz, zs, de;
  for (const StatRecord& r : rows) {
    sw.push_back(r.swap);
    sz.push_back(r.sz);
    zs.push_back(r.zs);
    de.push_back(r.des);
  }
  expect(Polynomial::from_values(sw) == want, "swap distribution");
  expect(Polynomial::from_values(sz) == want, "sz distribution");
  expect(Polynomial::from_values(zs) == want, "zs distribution");
  expect(Polynomial::from_values(de) == want, "des distribution");
  expect(want == in.hstar(), "h* equals 1,7,7,1");

  auto row = [&](const std::string& alpha) -> const StatRecord* {
    for (const StatRecord& r : rows) {
      if (perm_str(r.alt_perm) == alpha) return &r;
    }
    return nullptr;
  };
  const StatRecord* first = row("34251");
  expect(first && first->flow == base_flow(5) && perm_str(first->cyclic) == "12345" && first->swap == 1 &&
             first->sz == 1 && first->zs == 0 && first->des == 0,
         "row 34251");
  const StatRecord* shaded = row("45231");
  expect(shaded && shaded->flow == flow_of(5, {0, 1, 0, 1}, {0, 0, 0, 2, 0}) &&
             perm_str(shaded->cyclic) == "14523" && shaded->swap == 0 && shaded->sz == 2 && shaded->zs == 1 &&
             shaded->des == 1,
         "row 45231");
  const IntegerFlow last = flow_of(5, {0, 0, 0, 0}, {0, 0, 1, 1, 2});
  const CyclicPerm pi = flow_to_cyclic(last);
  expect(perm_str(pi.linear()) == "53142" && des_stat(pi.linear()) == 3, "des pipeline for y=(0,0,1,1,2)");
  const StatRecord* last_row = row("15243");
  expect(last_row && last_row->flow == last && last_row->sz == 0 && last_row->zs == 2 && last_row->des == 3,
         "row 15243");

  if (!wrong.empty()) {
    std::string s = "mismatch:";
    for (const auto& w : wrong) s += " [" + w + "]";
    return {false, s};
  }
  return {true, "16 records, all four distributions 1,7,7,1, spot rows match"};
}

/// At n=6 there is a flow with offsets (2,none,-1) at i=2 whose m_2^+ image
/// is a dual neighbour, and one with (1,none,0) whose image sits one grid
/// step away without being a neighbour.
inline Outcome offset_example_n6(Instance& in) {
  const DualGraph& g = in.dual();
  auto has_edge = [&](std::size_t a, std::size_t b) {
    return std::any_of(g.edges.begin(), g.edges.end(),
                       [&](const DualEdge& e) { return e.from == a && e.to == b && e.move == 2; });
  };
  const OffsetSeq adjacent{3, {2, std::nullopt, -1}};
  const OffsetSeq blocked{3, {1, std::nullopt, 0}};
  std::optional<std::size_t> adjacent_witness;
  std::optional<std::size_t> blocked_witness;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const auto img = flow_move(g.nodes[k], 2, Sign::plus);
    if (!img) continue;
    const std::size_t j = g.index_of(*img);
    const OffsetSeq z = flow_offsets(g.nodes[k], 2);
    if (!adjacent_witness && z == adjacent && has_edge(k, j)) adjacent_witness = k;
    if (!blocked_witness && z == blocked && !has_edge(k, j)) {
      Coordinate step = g.coordinates[j];
      for (std::size_t a = 0; a < step.size(); ++a) step[a] -= g.coordinates[k][a];
      Coordinate unit(step.size(), 0);
      unit[0] = 1;
      if (step == unit) blocked_witness = k;
    }
  }
  if (!adjacent_witness || !blocked_witness) {
    return {false, std::string("missing witness:") + (adjacent_witness ? "" : " (2,none,-1) adjacent") +
                       (blocked_witness ? "" : " (1,none,0) grid neighbour without edge")};
  }
  return {true, "(2,none,-1) at " + flow_str(g.nodes[*adjacent_witness]) + "; (1,none,0) at " +
                    flow_str(g.nodes[*blocked_witness])};
}

}  // namespace checks

/// All checks, in report order.
inline const std::vector<Check>& check_registry() {
  using K = CheckKind;
  using namespace checks;
  static const std::vector<Check> registry = {
      {"route-count", K::theorem, 3, 1000, route_count},
      {"framed-orders", K::theorem, 3, 1000, framed_orders},
      {"clique-count", K::theorem, 3, 1000, [](Instance& in) { return cardinality("cliques", in.cliques().size(), in.n()); }},
      {"grove-count", K::theorem, 3, 1000, [](Instance& in) { return cardinality("groves", in.groves().size(), in.n()); }},
      {"flow-count", K::theorem, 3, 1000, [](Instance& in) { return cardinality("flows", in.flows().size(), in.n()); }},
      {"clique-size", K::theorem, 3, 1000, clique_size},
      {"routes-covered", K::theorem, 3, 1000, routes_covered},
      {"clique-flow-bijection", K::theorem, 3, 1000, clique_flow_bijection},
      {"clique-grove-flow", K::theorem, 3, 1000, clique_grove_flow},
      {"grove-flow-roundtrip", K::theorem, 3, 1000, grove_flow_roundtrip},
      {"adjacent-exchange", K::theorem, 3, 1000, adjacent_exchange},
      {"adjacent-exchange-graph-wide", K::exploratory, 3, 1000, adjacent_exchange_graph_wide},
      {"adjacent-move", K::theorem, 3, 1000, adjacent_move},
      {"moves-inverse", K::theorem, 3, 1000, moves_inverse},
      {"move-commutation", K::theorem, 3, 1000, move_commutation},
      {"move-graph-connected", K::theorem, 3, 1000, move_graph_connected},
      {"offset-shape", K::theorem, 3, 1000, offset_shape},
      {"offsets-agree", K::theorem, 3, 1000, offsets_agree},
      {"tracking-vs-offsets", K::theorem, 3, 1000, tracking_vs_offsets},
      {"tracking-unique-route", K::theorem, 3, 1000, tracking_unique_route},
      {"offset-criterion", K::theorem, 3, 1000, offset_criterion},
      {"grid-embedding", K::theorem, 3, 1000, grid_embedding},
      {"dual-connected", K::theorem, 3, 1000, dual_connected},
      {"degree-handshake", K::theorem, 3, 1000, degree_handshake},
      {"hstar-volume", K::theorem, 3, 1000, hstar_volume},
      {"ehrhart-consistency", K::theorem, 3, 1000, ehrhart_consistency},
      {"lattice-direct", K::theorem, 3, 1000, lattice_direct},
      {"alt-perm-flows", K::theorem, 3, 10, alt_perm_flows},
      {"hstar-swap", K::theorem, 3, 10, [](Instance& in) { return stat_matches(in, Statistic::swap); }},
      {"hstar-des", K::theorem, 3, 1000, [](Instance& in) { return stat_matches(in, Statistic::des); }},
      {"hstar-sz", K::conjecture, 3, 1000, [](Instance& in) { return stat_matches(in, Statistic::sz); }},
      {"hstar-zs", K::conjecture, 3, 1000, [](Instance& in) { return stat_matches(in, Statistic::zs); }},
      {"shelling-forward", K::conjecture, 3, 1000,
       [](Instance& in) { return shelling(in, ShellingDirection::forward); }},
      {"shelling-reverse", K::conjecture, 3, 1000,
       [](Instance& in) { return shelling(in, ShellingDirection::reverse); }},
      {"shelling-degrees", K::exploratory, 3, 1000, shelling_degrees},
      {"worked-example", K::theorem, 4, 4, worked_example_n4},
      {"table-n5", K::theorem, 5, 5, table_n5},
      {"offset-example", K::theorem, 6, 6, offset_example_n6},
  };
  return registry;
}

inline std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const Check& c : check_registry()) out.push_back(c.name);
  return out;
}

/// "all" or a comma-separated list of check names.
inline std::vector<const Check*> select_checks(const std::string& selection) {
  std::vector<const Check*> out;
  if (selection == "all") {
    for (const Check& c : check_registry()) out.push_back(&c);
    return out;
  }
  std::set<std::string> wanted;
  std::stringstream ss(selection);
  for (std::string name; std::getline(ss, name, ',');) {
    if (name.empty()) continue;
    const auto& reg = check_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const Check& c) { return c.name == name; })) {
      throw InvalidArgument("unknown check '" + name + "'");
    }
    wanted.insert(name);
  }
  if (wanted.empty()) throw InvalidArgument("no checks selected");
  for (const Check& c : check_registry()) {
    if (wanted.count(c.name)) out.push_back(&c);
  }
  return out;
}

inline CheckRecord run_check(const Check& check, Instance& in) {
  CheckRecord rec{check.name, in.n(), CheckStatus::pass, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = check.run(in);
  } catch (const ConsistencyFault& e) {
    out = {false, std::string("consistency fault: ") + e.what()};
  } catch (const std::exception& e) {
    out = {false, std::string("error: ") + e.what()};
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rec.detail = out.detail;
  switch (check.kind) {
    case CheckKind::theorem: rec.status = out.holds ? CheckStatus::pass : CheckStatus::fail; break;
    case CheckKind::conjecture: rec.status = out.holds ? CheckStatus::pass : CheckStatus::finding; break;
    case CheckKind::exploratory: rec.status = CheckStatus::note; break;
  }
  return rec;
}

/// Runs the selected checks for every n in [n_min, n_max] on `jobs` worker
/// threads. Records come out ordered by n, then registry order.
inline VerificationReport verify(int n_min, int n_max, const std::vector<const Check*>& selected, int jobs = 1,
                                 const EnumerationCache& cache = EnumerationCache()) {
  require_graph_size(n_min);
  if (n_max < n_min) throw InvalidArgument("empty range of graph sizes");
  if (jobs < 1) throw InvalidArgument("--jobs must be at least 1");

  std::vector<std::unique_ptr<Instance>> instances;
  struct Task {
    const Check* check;
    Instance* instance;
  };
  std::vector<Task> tasks;
  for (int n = n_min; n <= n_max; ++n) {
    instances.push_back(std::make_unique<Instance>(n, cache));
    for (const Check* c : selected) {
      if (c->applies(n)) tasks.push_back({c, instances.back().get()});
    }
  }

  VerificationReport report{n_min, n_max, std::vector<CheckRecord>(tasks.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      report.records[k] = run_check(*tasks[k].check, *tasks[k].instance);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace zzflow
