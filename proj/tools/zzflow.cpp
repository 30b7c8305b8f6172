// zzflow: command-line front end for the zzflow library.
//
// Exit status: 0 success, 1 failed theorem check (or an unaccepted
// finding), 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zzflow/zzflow.hpp"

namespace {

using namespace zzflow;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

struct Options {
  int n = 0;
  std::string object = "flows";
  std::string method;
  std::string format;
  std::string out;
  std::string cache;
  std::string checks = "all";
  std::string flow;
  std::string grove;
  std::string sign = "+";
  std::string side = "x";
  int i = 0;
  int left = 0;
  int jobs = 1;
  bool findings_ok = false;
  bool timings = false;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InvalidArgument("format '" + format + "' not supported here (" + list + ")");
}

std::string json_lines(const Json& items) {
  if (items.empty()) return "[]\n";
  std::string s = "[\n";
  for (std::size_t k = 0; k < items.size(); ++k) {
    s += "  " + items[k].dump() + (k + 1 < items.size() ? ",\n" : "\n");
  }
  return s + "]\n";
}

EnumerationCache make_cache(const Options& o) {
  return o.cache.empty() ? EnumerationCache() : EnumerationCache(o.cache);
}

std::string item_text(Object obj, const Json& j) {
  switch (obj) {
    case Object::routes: return j.get<std::string>();
    case Object::cliques: {
      std::string s;
      for (const Json& r : j.at("routes")) s += (s.empty() ? "" : " ") + r.get<std::string>();
      return s;
    }
    case Object::groves: {
      std::string s;
      for (const Json& t : j.at("trees")) {
        s += "(" + std::to_string(t[0].get<int>()) + "," + std::to_string(t[1].get<int>()) + "," +
             std::to_string(t[2].get<int>()) + ")";
      }
      return s;
    }
    case Object::flows: return flow_str(flow_from_json(j));
  }
  return {};
}

std::string run_enumerate(const Options& o) {
  const Object obj = parse_object(o.object);
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "text", "csv"});
  const Json items = make_cache(o).items(o.n, obj);
  if (format == "json") return json_lines(items);
  std::string s;
  if (format == "csv") {
    if (obj != Object::flows) throw InvalidArgument("csv is available for flows only");
    s = "x,y\n";
    for (const Json& j : items) {
      const IntegerFlow f = flow_from_json(j);
      auto join = [](const std::vector<int>& v) {
        std::string t;
        for (std::size_t k = 0; k < v.size(); ++k) t += (k ? " " : "") + std::to_string(v[k]);
        return t;
      };
      s += join(f.xs) + "," + join(f.ys) + "\n";
    }
    return s;
  }
  for (const Json& j : items) s += item_text(obj, j) + "\n";
  return s;
}

DualGraph dual_for(const Options& o) {
  const std::string method = o.method.empty() ? "flows" : o.method;
  if (method == "flows") return embed(build_dual(o.n, DualMethod::flows));
  if (method == "cliques") {
    return embed(build_dual_from_cliques(o.n, make_cache(o).cliques(o.n)));
  }
  throw InvalidArgument("method must be flows or cliques");
}

std::string run_dual(const Options& o) {
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "dot", "text"});
  const DualGraph g = dual_for(o);
  if (format == "json") return to_json(g).dump() + "\n";
  if (format == "dot") return dual_to_dot(g);
  std::string s;
  for (const DualEdge& e : g.edges) {
    s += flow_str(g.nodes[e.from]) + " -> " + flow_str(g.nodes[e.to]) + " [m" + std::to_string(e.move) + "+]\n";
  }
  return s;
}

std::string run_embed(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"json", "dot", "text"});
  const DualGraph g = dual_for(o);
  if (format == "dot") return dual_to_dot(g);
  if (format == "json") {
    Json out = Json::array();
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      out.push_back({{"flow", to_json(g.nodes[k])}, {"coordinate", g.coordinates[k]}});
    }
    return json_lines(out);
  }
  std::string s;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    s += coordinate_str(g.coordinates[k]) + " " + flow_str(g.nodes[k]) + "\n";
  }
  return s;
}

std::string run_hstar(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"json", "text"});
  const std::string method = o.method.empty() ? "ehrhart" : o.method;
  Polynomial p;
  if (method == "ehrhart") {
    p = hstar_ehrhart(o.n);
  } else if (method == "sz") {
    p = stat_polynomial(o.n, Statistic::sz);
  } else if (method == "zs") {
    p = stat_polynomial(o.n, Statistic::zs);
  } else if (method == "swap") {
    p = stat_polynomial(o.n, Statistic::swap);
  } else if (method == "des") {
    p = stat_polynomial(o.n, Statistic::des);
  } else {
    throw InvalidArgument("method must be one of ehrhart, sz, zs, swap, des");
  }
  return (format == "json" ? to_json(p).dump() : p.str()) + "\n";
}

std::string run_table(const Options& o) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  require_format(format, {"csv", "json"});
  const std::vector<StatRecord> rows = stat_table(o.n == 0 ? 5 : o.n);
  if (format == "csv") return stat_table_csv(rows);
  Json out = Json::array();
  for (const StatRecord& r : rows) out.push_back(to_json(r));
  return json_lines(out);
}

/// The flow given by --flow or --grove (exactly one), checked against --n.
IntegerFlow input_flow(const Options& o) {
  if (o.flow.empty() == o.grove.empty()) throw InvalidArgument("give exactly one of --flow and --grove");
  const IntegerFlow f =
      o.flow.empty() ? flow_from_grove(grove_from_json(parse_json(o.grove))) : flow_from_json(parse_json(o.flow));
  if (o.n != 0 && o.n != f.n) throw InvalidArgument("--n does not match the size of the input");
  return f;
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  throw InvalidArgument("sign must be + or -");
}

std::string run_offsets(const Options& o) {
  const IntegerFlow f = input_flow(o);
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "text"});
  const OffsetSeq z = o.grove.empty() ? flow_offsets(f, o.i) : grove_offsets(grove_from_flow(f), o.i);
  return (format == "json" ? to_json(z).dump() : to_string(z)) + "\n";
}

std::string run_move(const Options& o) {
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "text"});
  const IntegerFlow f = input_flow(o);
  const Sign sign = parse_sign(o.sign);
  if (!o.grove.empty()) {
    const auto g = grove_move(grove_from_flow(f), o.i, sign);
    if (!g) return "not applicable\n";
    return (format == "json" ? to_json(*g).dump() : item_text(Object::groves, to_json(*g))) + "\n";
  }
  const auto m = flow_move(f, o.i, sign);
  if (!m) return "not applicable\n";
  return (format == "json" ? to_json(*m).dump() : flow_str(*m)) + "\n";
}

std::string run_track(const Options& o) {
  const Grove g = grove_from_flow(input_flow(o));
  TrackOutcome t;
  if (o.left == 0) {
    t = track_top_r1(g, o.i);
  } else {
    if (o.side != "x" && o.side != "y") throw InvalidArgument("side must be x or y");
    t = track_edge(g, o.i, o.left, o.side == "x" ? RightVertex::slack : RightVertex::nonslack);
  }
  return t.trackable ? "success\n" : "stuck at tree " + std::to_string(t.stuck_at) + "\n";
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::trunc);
  if (!f) throw InvalidArgument("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of the contracted zigzag flow polytope"};
  app.require_subcommand(1);
  Options o;

  auto with_common = [&](CLI::App* sub, bool needs_n) {
    auto* opt = sub->add_option("--n", o.n, "graph size (>= 3)");
    if (needs_n) opt->required();
    sub->add_option("--format", o.format, "json, csv, dot or text");
    sub->add_option("--out", o.out, "write output to this file");
    return sub;
  };
  auto* enumerate = with_common(app.add_subcommand("enumerate", "list routes, cliques, groves or flows"), true);
  enumerate->add_option("--object", o.object, "routes, cliques, groves or flows");
  enumerate->add_option("--cache", o.cache, "cache directory");

  auto* dual = with_common(app.add_subcommand("dual", "dual graph of the triangulation"), true);
  dual->add_option("--method", o.method, "flows or cliques");
  dual->add_option("--cache", o.cache, "cache directory");
  auto* emb = with_common(app.add_subcommand("embed", "grid coordinates of the simplices"), true);
  emb->add_option("--method", o.method, "flows or cliques");
  emb->add_option("--cache", o.cache, "cache directory");

  auto* hstar = with_common(app.add_subcommand("hstar", "h*-polynomial"), true);
  hstar->add_option("--method", o.method, "ehrhart, sz, zs, swap or des");

  auto* verify_cmd = with_common(app.add_subcommand("verify", "run the verification checks for n = 3..N"), true);
  verify_cmd->add_option("--checks", o.checks, "all, or a comma-separated list of check names");
  verify_cmd->add_option("--jobs", o.jobs, "worker threads");
  verify_cmd->add_option("--cache", o.cache, "cache directory");
  verify_cmd->add_flag("--findings-ok", o.findings_ok, "exit 0 when the only divergences are findings");
  verify_cmd->add_flag("--timings", o.timings, "print per-check timings to stderr");

  auto* table = with_common(app.add_subcommand("table1", "per-permutation statistics table (default n=5)"), false);

  auto* offsets = with_common(app.add_subcommand("offsets", "sequence of offsets at i"), false);
  auto* move = with_common(app.add_subcommand("move", "elementary move m_i^sign"), false);
  auto* track = with_common(app.add_subcommand("track", "track a grove edge from tree i"), false);
  for (auto* sub : {offsets, move, track}) {
    sub->add_option("--flow", o.flow, "flow as JSON");
    sub->add_option("--grove", o.grove, "grove as JSON");
    sub->add_option("--i", o.i, "inner vertex")->required();
  }
  move->add_option("--sign", o.sign, "+ or -");
  track->add_option("--left", o.left, "left vertex index (default: top edge at r_1)");
  track->add_option("--side", o.side, "x or y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (*verify_cmd) {
      const VerificationReport report =
          verify(3, o.n, select_checks(o.checks), o.jobs, make_cache(o));
      const std::string format = o.format.empty() ? "text" : o.format;
      require_format(format, {"text", "json"});
      emit(o, format == "json" ? report.json().dump(2) + "\n" : report.text());
      if (o.timings) std::cerr << report.timings();
      return report.exit_status(o.findings_ok);
    }
    std::string text;
    if (*enumerate) text = run_enumerate(o);
    if (*dual) text = run_dual(o);
    if (*emb) text = run_embed(o);
    if (*hstar) text = run_hstar(o);
    if (*table) text = run_table(o);
    if (*offsets) text = run_offsets(o);
    if (*move) text = run_move(o);
    if (*track) text = run_track(o);
    emit(o, text);
    return exit_ok;
  } catch (const ConsistencyFault& e) {
    std::cerr << "consistency fault: " << e.what() << '\n';
    return exit_failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_invalid;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_invalid;
  }
}
