#pragma once

// JSON, CSV and DOT encodings. JSON keys come out sorted (nlohmann's default
// object type is an ordered map), which keeps every dump deterministic.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "zzflow/clique.hpp"
#include "zzflow/dual_graph.hpp"
#include "zzflow/ehrhart.hpp"
#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/graph.hpp"
#include "zzflow/grove.hpp"
#include "zzflow/hstar.hpp"
#include "zzflow/permutations.hpp"

namespace zzflow {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

inline std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw InvalidArgument(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline int graph_size_field(const Json& j) {
  const Json& v = field(j, "n");
  if (!v.is_number_integer()) throw InvalidArgument("\"n\" must be an integer");
  return v.get<int>();
}

}  // namespace detail

/// Parses text as JSON, reporting syntax errors as invalid input.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

// ---- routes and cliques ----------------------------------------------------

inline Json to_json(const Route& r) { return r.str(); }

inline Json to_json(const Clique& c) {
  Json routes = Json::array();
  for (const Route& r : c.routes) routes.push_back(r.str());
  return {{"n", c.n}, {"routes", routes}};
}

inline Clique clique_from_json(const Json& j) {
  const int n = detail::graph_size_field(j);
  require_graph_size(n);
  const Json& list = detail::field(j, "routes");
  if (!list.is_array()) throw MalformedClique("\"routes\" must be an array");
  std::vector<Route> routes;
  for (const Json& r : list) {
    if (!r.is_string()) throw MalformedClique("routes must be strings");
    routes.push_back(parse_route(n, r.get<std::string>()));
  }
  return make_clique(n, std::move(routes));
}

// ---- groves ----------------------------------------------------------------

inline Json to_json(const Grove& g) {
  Json trees = Json::array();
  for (const Tree& t : g.trees) trees.push_back({t.left, t.slack_deg, t.nonslack_deg});
  return {{"n", g.n}, {"trees", trees}};
}

inline Grove grove_from_json(const Json& j) {
  Grove g{detail::graph_size_field(j), {}};
  const Json& trees = detail::field(j, "trees");
  if (!trees.is_array()) throw MalformedGrove("\"trees\" must be an array");
  for (const Json& t : trees) {
    const std::vector<int> v = detail::int_list(t, "tree");
    if (v.size() != 3) throw MalformedGrove("a tree is [p, d1, d2]");
    g.trees.push_back({v[0], v[1], v[2]});
  }
  require_valid(g);
  return g;
}

// ---- flows -----------------------------------------------------------------

inline Json to_json(const IntegerFlow& f) { return {{"n", f.n}, {"x", f.xs}, {"y", f.ys}}; }

/// "n" is optional; without it n = |x| + 1.
inline IntegerFlow flow_from_json(const Json& j) {
  IntegerFlow f;
  f.xs = detail::int_list(detail::field(j, "x"), "x");
  f.ys = detail::int_list(detail::field(j, "y"), "y");
  f.n = j.contains("n") ? detail::graph_size_field(j) : static_cast<int>(f.xs.size()) + 1;
  require_valid(f);
  return f;
}

inline std::string flow_str(const IntegerFlow& f) {
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
  };
  return "x=(" + list(f.xs) + ") y=(" + list(f.ys) + ")";
}

// ---- offsets and polynomials -----------------------------------------------

inline Json to_json(const OffsetSeq& z) {
  Json out = Json::array();
  for (const auto& e : z.entries) {
    if (e) {
      out.push_back(*e);
    } else {
      out.push_back("none");
    }
  }
  return out;
}

inline Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const BigInt& c : p.coeffs()) out.push_back(bigint_json(c));
  return out;
}

// ---- dual graph ------------------------------------------------------------

inline std::string coordinate_str(const Coordinate& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

inline Json to_json(const DualGraph& g) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    Json node = {{"id", k}, {"flow", to_json(g.nodes[k])}};
    if (k < g.coordinates.size()) node["coordinate"] = g.coordinates[k];
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (const DualEdge& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"move", e.move}});
  return {{"n", g.n}, {"nodes", nodes}, {"edges", edges}};
}

inline std::string dual_to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "digraph dual_" << g.n << " {\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    os << "  " << k << " [label=\"" << flow_str(g.nodes[k]);
    if (k < g.coordinates.size()) os << "\\n" << coordinate_str(g.coordinates[k]);
    os << "\"];\n";
  }
  for (const DualEdge& e : g.edges) {
    os << "  " << e.from << " -> " << e.to << " [label=\"" << e.move << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---- statistics table ------------------------------------------------------

inline Json to_json(const StatRecord& r) {
  return {{"alt_perm", perm_str(r.alt_perm)},
          {"inverse", perm_str(r.inverse)},
          {"x", r.flow.xs},
          {"y", r.flow.ys},
          {"cyclic_perm", perm_str(r.cyclic)},
          {"swap", r.swap},
          {"sz", r.sz},
          {"zs", r.zs},
          {"des", r.des}};
}

inline std::string stat_table_csv(const std::vector<StatRecord>& rows) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    return s;
  };
  std::ostringstream os;
  os << "alt_perm,inverse,x,y,cyclic_perm,swap,sz,zs,des\n";
  for (const StatRecord& r : rows) {
    os << perm_str(r.alt_perm) << ',' << perm_str(r.inverse) << ',' << join(r.flow.xs) << ','
       << join(r.flow.ys) << ',' << perm_str(r.cyclic) << ',' << r.swap << ',' << r.sz << ','
       << r.zs << ',' << r.des << '\n';
  }
  return os.str();
}

}  // namespace zzflow
