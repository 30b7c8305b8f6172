#pragma once

// On-disk cache of enumerations: one file zz_{n}_{object}.json per pair,
// holding {"schema_version", "n", "object", "items"}. A file whose header
// does not match is treated as a miss and rewritten.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zzflow/clique.hpp"
#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/graph.hpp"
#include "zzflow/grove.hpp"
#include "zzflow/serialize.hpp"

namespace zzflow {

inline constexpr int cache_schema_version = 1;

enum class Object { routes, cliques, groves, flows };

inline std::string to_string(Object o) {
  switch (o) {
    case Object::routes: return "routes";
    case Object::cliques: return "cliques";
    case Object::groves: return "groves";
    case Object::flows: return "flows";
  }
  return "?";
}

inline Object parse_object(const std::string& s) {
  for (Object o : {Object::routes, Object::cliques, Object::groves, Object::flows}) {
    if (to_string(o) == s) return o;
  }
  throw InvalidArgument("unknown object '" + s + "' (routes, cliques, groves, flows)");
}

/// The enumeration as a JSON array, in canonical order.
inline Json enumerate_json(int n, Object o) {
  require_graph_size(n);
  Json items = Json::array();
  switch (o) {
    case Object::routes:
      for (const Route& r : enumerate_routes(n)) items.push_back(to_json(r));
      break;
    case Object::cliques:
      for (const Clique& c : enumerate_cliques(n)) items.push_back(to_json(c));
      break;
    case Object::groves:
      for (const Grove& g : enumerate_groves(n)) items.push_back(to_json(g));
      break;
    case Object::flows:
      for (const IntegerFlow& f : enumerate_flows(n)) items.push_back(to_json(f));
      break;
  }
  return items;
}

class EnumerationCache {
 public:
  EnumerationCache() = default;
  explicit EnumerationCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return dir_.has_value(); }

  std::filesystem::path file_for(int n, Object o) const {
    return *dir_ / ("zz_" + std::to_string(n) + "_" + to_string(o) + ".json");
  }

  /// Cached items when the file is present and current, else computes and
  /// (with a cache directory) stores them.
  Json items(int n, Object o) const {
    if (!dir_) return enumerate_json(n, o);
    if (auto hit = load(n, o)) return *hit;
    Json fresh = enumerate_json(n, o);
    store(n, o, fresh);
    return fresh;
  }

  std::vector<Clique> cliques(int n) const {
    std::vector<Clique> out;
    for (const Json& j : items(n, Object::cliques)) out.push_back(clique_from_json(j));
    return out;
  }

  std::vector<IntegerFlow> flows(int n) const {
    std::vector<IntegerFlow> out;
    for (const Json& j : items(n, Object::flows)) out.push_back(flow_from_json(j));
    return out;
  }

 private:
  std::optional<Json> load(int n, Object o) const {
    std::ifstream in(file_for(n, o));
    if (!in) return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    Json doc = Json::parse(text.str(), nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (doc.value("schema_version", -1) != cache_schema_version) return std::nullopt;
    if (doc.value("n", -1) != n || doc.value("object", std::string()) != to_string(o)) return std::nullopt;
    if (!doc.contains("items") || !doc["items"].is_array()) return std::nullopt;
    return doc["items"];
  }

  void store(int n, Object o, const Json& items) const {
    std::filesystem::create_directories(*dir_);
    const Json doc = {{"schema_version", cache_schema_version},
                      {"n", n},
                      {"object", to_string(o)},
                      {"items", items}};
    const auto target = file_for(n, o);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw InvalidArgument("cannot write cache file " + tmp.string());
      out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

  std::optional<std::filesystem::path> dir_;
};

}  // namespace zzflow
