// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. The single argument is the path of the zzflow
// executable, used by the determinism criterion.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "support/testing.hpp"

using namespace zzflow;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

std::vector<int> ints(const Polynomial& p) {
  std::vector<int> out;
  for (const BigInt& c : p.coeffs()) out.push_back(static_cast<int>(c));
  return out;
}

Verdict worked_example() {
  using namespace zztest;
  Verdict v;
  const auto cliques = enumerate_cliques(4);
  v.require(cliques.size() == 5 && enumerate_groves(4).size() == 5 && enumerate_flows(4).size() == 5,
            "expected 5 cliques, groves and flows");
  v.require(std::binary_search(cliques.begin(), cliques.end(), clique_A()), "clique of simplex A missing");
  v.require(clique_to_flow(4, clique_A()) == flow_A(), "flow of simplex A");
  v.require(clique_to_grove(4, clique_A()) == Grove{4, {{2, 2, 1}, {3, 3, 1}}}, "grove of simplex A");
  v.require(flow_move(flow_A(), 3, Sign::plus) == flow_B(), "m_3^+(A) != B");
  v.require(flow_move(flow_B(), 2, Sign::plus) == flow_D(), "m_2^+(B) != D");
  v.require(flow_move(flow_B(), 3, Sign::plus) == flow_C(), "m_3^+(B) != C");
  v.require(!flow_move(flow_B(), 2, Sign::minus).has_value(), "m_2^-(B) should not apply");
  const DualGraph g = embed(build_dual(4, DualMethod::flows));
  v.require(g.edges.size() == 5, "dual graph edge count");
  v.require(g == embed(build_dual(4, DualMethod::cliques)), "dual graph constructions differ");
  const std::set<Coordinate> want{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}};
  std::set<Coordinate> got(g.coordinates.begin(), g.coordinates.end());
  std::set<Coordinate> swapped;
  for (const Coordinate& c : got) swapped.insert({c[1], c[0]});
  v.require(got == want || swapped == want, "grid coordinates");
  return v;
}

Verdict cardinalities() {
  Verdict v;
  const std::vector<long long> printed{2, 5, 16, 61, 272, 1385};
  for (int n = 3; n <= 8; ++n) {
    const long long want = printed[static_cast<std::size_t>(n - 3)];
    const long long brute = zztest::alternating_count_by_search(n);
    const auto c = static_cast<long long>(enumerate_cliques(n).size());
    const auto g = static_cast<long long>(enumerate_groves(n).size());
    const auto f = static_cast<long long>(enumerate_flows(n).size());
    v.require(brute == want && c == want && g == want && f == want,
              "n=" + std::to_string(n) + ": cliques " + std::to_string(c) + ", groves " + std::to_string(g) +
                  ", flows " + std::to_string(f) + ", alternating " + std::to_string(brute));
  }
  return v;
}

Verdict theorem_suite() {
  Verdict v;
  const auto checks = select_checks(
      "adjacent-exchange,adjacent-move,move-commutation,move-graph-connected,offsets-agree,"
      "tracking-unique-route,offset-criterion,grid-embedding,dual-connected");
  const VerificationReport r = verify(3, 7, checks);
  for (const CheckRecord& rec : r.records) {
    v.require(rec.status == CheckStatus::pass, rec.name + " n=" + std::to_string(rec.n) + ": " + rec.detail);
  }
  v.require(r.records.size() == checks.size() * 5, "missing check records");
  return v;
}

Verdict hstar_cross_validation() {
  Verdict v;
  v.require(ints(hstar_ehrhart(4)) == std::vector<int>{1, 3, 1}, "h*(4) != (1,3,1)");
  v.require(ints(hstar_ehrhart(5)) == std::vector<int>{1, 7, 7, 1}, "h*(5) != (1,7,7,1)");
  for (int n = 3; n <= 8; ++n) {
    const Polynomial h = hstar_ehrhart(n);
    for (Statistic s : {Statistic::sz, Statistic::zs, Statistic::swap, Statistic::des}) {
      const Polynomial p = stat_polynomial(n, s);
      v.require(p == h, to_string(s) + " at n=" + std::to_string(n) + ": " + p.str() + " vs " + h.str());
    }
  }
  return v;
}

Verdict shelling() {
  Verdict v;
  for (int n = 3; n <= 7; ++n) {
    const Polynomial h = hstar_ehrhart(n);
    for (auto dir : {ShellingDirection::forward, ShellingDirection::reverse}) {
      const ShellingResult r = check_shelling(n, dir);
      const std::string tag = std::string(dir == ShellingDirection::forward ? "forward" : "reverse") +
                              " n=" + std::to_string(n);
      v.require(r.is_shelling, tag + " is not a shelling");
      v.require(r.h == h, tag + " h-vector " + r.h.str());
    }
  }
  return v;
}

Verdict table() {
  Verdict v;
  const auto rows = reproduce_table1();
  v.require(rows.size() == 16, "expected 16 records");
  std::vector<int> swap, sz, zs, des;
  for (const StatRecord& r : rows) {
    swap.push_back(r.swap);
    sz.push_back(r.sz);
    zs.push_back(r.zs);
    des.push_back(r.des);
  }
  const std::vector<int> want{1, 7, 7, 1};
  v.require(ints(Polynomial::from_values(swap)) == want, "swap distribution");
  v.require(ints(Polynomial::from_values(sz)) == want, "sz distribution");
  v.require(ints(Polynomial::from_values(zs)) == want, "zs distribution");
  v.require(ints(Polynomial::from_values(des)) == want, "des distribution");
  auto row = [&](const std::string& alpha) -> const StatRecord* {
    for (const StatRecord& r : rows) {
      if (perm_str(r.alt_perm) == alpha) return &r;
    }
    return nullptr;
  };
  const StatRecord* first = row("34251");
  v.require(first && perm_str(first->inverse) == "53124" && first->flow == base_flow(5) &&
                perm_str(first->cyclic) == "12345" && first->swap == 1 && first->sz == 1 && first->zs == 0 &&
                first->des == 0,
            "row 34251");
  const StatRecord* shaded = row("45231");
  v.require(shaded && perm_str(shaded->inverse) == "53412" && perm_str(shaded->cyclic) == "14523" &&
                shaded->flow == zztest::flow(5, {0, 1, 0, 1}, {0, 0, 0, 2, 0}) && shaded->swap == 0 &&
                shaded->sz == 2 && shaded->zs == 1 && shaded->des == 1,
            "row 45231");
  const StatRecord* last = row("15243");
  v.require(last && perm_str(last->cyclic) == "53142" && last->sz == 0 && last->zs == 2 && last->des == 3,
            "row 15243");
  return v;
}

struct CliResult {
  int status = -1;
  std::string out;
  double seconds = 0;
};

CliResult run_cli(const std::string& cmd) {
  CliResult r;
  const auto start = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), k);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Verdict determinism(const std::string& cli) {
  Verdict v;
  if (cli.empty()) {
    v.require(false, "no zzflow executable given");
    return v;
  }
  const std::string cmd = cli + " verify --n 8 --checks all --jobs 1";
  const CliResult a = run_cli(cmd);
  const CliResult b = run_cli(cmd);
  v.require(a.status == 0 && b.status == 0, "verify exited with " + std::to_string(a.status));
  v.require(!a.out.empty() && a.out == b.out, "reports differ between runs");
  v.require(a.seconds < 600 && b.seconds < 600, "verify took " + std::to_string(std::max(a.seconds, b.seconds)) + " s");
  if (v.ok) {
    v.detail = std::to_string(a.out.size()) + " identical bytes, " + std::to_string(a.seconds).substr(0, 5) + " s";
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 worked example n=4", 1, worked_example},
      {"2 cardinalities n=3..8", 60, cardinalities},
      {"3 theorem suite n=3..7", 300, theorem_suite},
      {"4 h* cross-validation", 300, hstar_cross_validation},
      {"5 shelling n=3..7", 300, shelling},
      {"6 statistics table n=5", 60, table},
      {"7 determinism and runtime of verify --n 8", 1200, [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    v.require(secs < c.limit_seconds, "over the time limit");
    if (!v.ok) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (v.ok ? "PASS " : "FAIL ") << c.name << " (" << timing << ")"
              << (v.detail.empty() ? "" : ": " + v.detail) << '\n';
  }
  return failed == 0 ? 0 : 1;
}
