#include <gtest/gtest.h>

#include <set>

#include "support/testing.hpp"

using namespace zzflow;

TEST(Registry, NamesAreUniqueAndSelectable) {
  const auto names = check_names();
  EXPECT_GE(names.size(), 30u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  EXPECT_EQ(select_checks("all").size(), names.size());
  const auto two = select_checks("flow-count,route-count");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0]->name, "route-count");  // registry order, not request order
}

TEST(Registry, UnknownOrEmptySelectionRejected) {
  EXPECT_THROW(select_checks("route-count,no-such-check"), InvalidArgument);
  EXPECT_THROW(select_checks(","), InvalidArgument);
}

TEST(Verify, AllChecksPassThroughSix) {
  const VerificationReport r = verify(3, 6, select_checks("all"));
  EXPECT_EQ(r.count(CheckStatus::fail), 0) << r.text();
  EXPECT_EQ(r.count(CheckStatus::finding), 0) << r.text();
  EXPECT_EQ(r.exit_status(false), 0);
}

TEST(Verify, EveryCheckRunsForSomeSize) {
  const VerificationReport r = verify(3, 6, select_checks("all"));
  std::set<std::string> seen;
  for (const auto& rec : r.records) seen.insert(rec.name);
  const auto names = check_names();
  EXPECT_EQ(seen, std::set<std::string>(names.begin(), names.end()));
}

TEST(Verify, ReportIndependentOfThreadCount) {
  const auto checks = select_checks("all");
  const std::string one = verify(3, 6, checks, 1).text();
  EXPECT_EQ(verify(3, 6, checks, 3).text(), one);
  EXPECT_EQ(verify(3, 6, checks, 8).text(), one);
}

TEST(Verify, RecordsOrderedBySizeThenRegistry) {
  const VerificationReport r = verify(3, 5, select_checks("route-count,clique-count"));
  std::vector<std::pair<int, std::string>> got;
  for (const auto& rec : r.records) got.emplace_back(rec.n, rec.name);
  EXPECT_EQ(got, (std::vector<std::pair<int, std::string>>{{3, "route-count"},
                                                           {3, "clique-count"},
                                                           {4, "route-count"},
                                                           {4, "clique-count"},
                                                           {5, "route-count"},
                                                           {5, "clique-count"}}));
}

TEST(Verify, SizeRestrictedChecksOnlyRunInRange) {
  const VerificationReport r = verify(3, 6, select_checks("worked-example,table-n5,offset-example"));
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].n, 4);
  EXPECT_EQ(r.records[1].n, 5);
  EXPECT_EQ(r.records[2].n, 6);
}

TEST(Verify, BadArgumentsRejected) {
  EXPECT_THROW(verify(2, 4, select_checks("all")), InvalidArgument);
  EXPECT_THROW(verify(5, 4, select_checks("all")), InvalidArgument);
  EXPECT_THROW(verify(3, 4, select_checks("all"), 0), InvalidArgument);
}

TEST(Report, ExitStatusSemantics) {
  VerificationReport r{3, 3, {{"a", 3, CheckStatus::pass, "", 0}, {"b", 3, CheckStatus::note, "", 0}}};
  EXPECT_EQ(r.exit_status(false), 0);
  r.records.push_back({"c", 3, CheckStatus::finding, "", 0});
  EXPECT_EQ(r.exit_status(false), 1);
  EXPECT_EQ(r.exit_status(true), 0);
  r.records.push_back({"d", 3, CheckStatus::fail, "", 0});
  EXPECT_EQ(r.exit_status(true), 1);
}

TEST(Report, TextLayout) {
  const VerificationReport r{3, 4, {{"route-count", 3, CheckStatus::pass, "5 routes", 0.25},
                                    {"hstar-sz", 12, CheckStatus::finding, "differs", 1.0}}};
  EXPECT_EQ(r.text(),
            "zzflow verification report, n=3..4, 2 checks\n"
            "PASS     n=3  route-count: 5 routes\n"
            "FINDING  n=12 hstar-sz: differs\n"
            "summary: pass=1 fail=0 finding=1 note=0\n");
  EXPECT_EQ(r.json()["summary"]["finding"], 1);
  EXPECT_NE(r.timings().find("0.250s n=3 route-count"), std::string::npos);
}

TEST(RunCheck, ExceptionsBecomeFailures) {
  const Check boom{"boom", CheckKind::theorem, 3, 3,
                   [](Instance&) -> Outcome { throw ConsistencyFault("broken"); }};
  const EnumerationCache cache;
  Instance in(3, cache);
  const CheckRecord rec = run_check(boom, in);
  EXPECT_EQ(rec.status, CheckStatus::fail);
  EXPECT_NE(rec.detail.find("broken"), std::string::npos);
}

TEST(RunCheck, KindDecidesStatus) {
  const EnumerationCache cache;
  Instance in(3, cache);
  const auto no = [](Instance&) { return Outcome{false, "x"}; };
  EXPECT_EQ(run_check({"c", CheckKind::conjecture, 3, 3, no}, in).status, CheckStatus::finding);
  EXPECT_EQ(run_check({"e", CheckKind::exploratory, 3, 3, no}, in).status, CheckStatus::note);
  EXPECT_EQ(run_check({"t", CheckKind::theorem, 3, 3, no}, in).status, CheckStatus::fail);
}
