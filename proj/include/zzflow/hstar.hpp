#pragma once

// Generating polynomials of the sz, zs, swap and des statistics, and the
// joined per-permutation table that lines all pipelines up.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "zzflow/clique.hpp"
#include "zzflow/dual_graph.hpp"
#include "zzflow/ehrhart.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/permutations.hpp"

namespace zzflow {

enum class Statistic { sz, zs, swap, des };

inline std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::sz: return "sz";
    case Statistic::zs: return "zs";
    case Statistic::swap: return "swap";
    case Statistic::des: return "des";
  }
  return "?";
}

inline std::vector<int> sz_values(const DualGraph& g) {
  std::vector<int> v;
  for (const DegreeStat& d : degree_stats(g)) v.push_back(d.sz);
  return v;
}

inline std::vector<int> zs_values(const DualGraph& g) {
  std::vector<int> v;
  for (const DegreeStat& d : degree_stats(g)) v.push_back(d.zs);
  return v;
}

inline Polynomial stat_polynomial(int n, Statistic stat) {
  require_graph_size(n);
  std::vector<int> values;
  switch (stat) {
    case Statistic::sz:
      values = sz_values(build_dual(n, DualMethod::flows));
      break;
    case Statistic::zs:
      values = zs_values(build_dual(n, DualMethod::flows));
      break;
    case Statistic::swap:
      for (const Permutation& a : alternating_perms(n)) values.push_back(swap_stat(a));
      break;
    case Statistic::des:
      for (const IntegerFlow& f : enumerate_flows(n)) {
        values.push_back(des_stat(flow_to_cyclic(f).linear()));
      }
      break;
  }
  return Polynomial::from_values(values);
}

struct StatRecord {
  Permutation alt_perm;
  Permutation inverse;
  IntegerFlow flow;
  Permutation cyclic;
  int swap = 0;
  int sz = 0;
  int zs = 0;
  int des = 0;
};

/// One record per alternating permutation of [n], sorted by permutation:
/// permutation -> clique -> flow -> (dual-graph degrees, cyclic permutation).
inline std::vector<StatRecord> stat_table(int n) {
  require_graph_size(n);
  const DualGraph g = build_dual(n, DualMethod::flows);
  const std::vector<DegreeStat> degrees = degree_stats(g);
  std::vector<StatRecord> rows;
  std::vector<bool> hit(g.nodes.size(), false);
  for (const Permutation& alpha : alternating_perms(n)) {
    StatRecord r;
    r.alt_perm = alpha;
    r.inverse = inverse(alpha);
    r.flow = clique_to_flow(n, alt_perm_to_clique(alpha));
    const std::size_t k = g.index_of(r.flow);
    if (hit[k]) {
      throw ConsistencyFault("two alternating permutations give the flow of node " +
                             std::to_string(k));
    }
    hit[k] = true;
    r.cyclic = flow_to_cyclic(r.flow).linear();
    r.swap = swap_stat(alpha);
    r.sz = degrees[k].sz;
    r.zs = degrees[k].zs;
    r.des = des_stat(r.cyclic);
    rows.push_back(std::move(r));
  }
  return rows;
}

/// The 16 records for n = 5.
inline std::vector<StatRecord> reproduce_table1() { return stat_table(5); }

}  // namespace zzflow
