#include <gtest/gtest.h>

#include <algorithm>

#include "support/testing.hpp"

using namespace zzflow;
using zztest::flow;

namespace {

Grove grove_A() { return {4, {{2, 2, 1}, {3, 3, 1}}}; }
Grove grove_B() { return {4, {{2, 2, 1}, {3, 2, 2}}}; }
Grove grove_D() { return {4, {{2, 1, 2}, {2, 2, 1}}}; }

}  // namespace

TEST(GroveFromFlow, Examples) {
  EXPECT_EQ(grove_from_flow(zztest::flow_A()), grove_A());
  EXPECT_EQ(grove_from_flow(base_flow(5)), (Grove{5, {{2, 2, 1}, {3, 3, 1}, {4, 4, 1}}}));
  EXPECT_EQ(grove_from_flow(flow(5, {0, 1, 0, 1}, {0, 0, 0, 2, 0})), (Grove{5, {{2, 2, 1}, {3, 1, 3}, {2, 2, 1}}}));
}

TEST(FlowFromGrove, Examples) {
  EXPECT_EQ(flow_from_grove(grove_A()), zztest::flow_A());
  EXPECT_EQ(flow_from_grove(grove_D()), zztest::flow_D());
}

TEST(FlowFromGrove, InvalidGroveRejected) {
  EXPECT_THROW(flow_from_grove(Grove{4, {{2, 2, 1}, {3, 2, 1}}}), MalformedGrove);  // not a tree
  EXPECT_THROW(flow_from_grove(Grove{4, {{2, 2, 1}, {4, 3, 2}}}), MalformedGrove);  // wrong left count
  EXPECT_THROW(flow_from_grove(Grove{4, {{2, 2, 1}}}), MalformedGrove);             // too few trees
  EXPECT_THROW(flow_from_grove(Grove{4, {{2, 0, 3}, {3, 3, 1}}}), MalformedGrove);  // isolated right vertex
}

TEST(Groves, RoundTripBothWays) {
  for (int n = 3; n <= 7; ++n) {
    for (const Grove& g : enumerate_groves(n)) EXPECT_EQ(grove_from_flow(flow_from_grove(g)), g);
    for (const IntegerFlow& f : enumerate_flows(n)) EXPECT_EQ(flow_from_grove(grove_from_flow(f)), f);
  }
}

TEST(Groves, CountEqualsFlowCount) {
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(enumerate_groves(n).size(), enumerate_flows(n).size()) << n;
}

TEST(Groves, EnumeratedGrovesAreValidAndDistinct) {
  for (int n = 3; n <= 7; ++n) {
    const auto groves = enumerate_groves(n);
    EXPECT_TRUE(std::adjacent_find(groves.begin(), groves.end()) == groves.end());
    for (const Grove& g : groves) EXPECT_EQ(grove_violation(g), "");
  }
}

TEST(Tracking, SimplexBFromTreeTwoSucceeds) { EXPECT_TRUE(track_top_r1(grove_B(), 2).trackable); }

TEST(Tracking, SimplexAFromTreeTwoStuckAtTreeThree) {
  const TrackOutcome t = track_top_r1(grove_A(), 2);
  EXPECT_FALSE(t.trackable);
  EXPECT_EQ(t.stuck_at, 3);
}

TEST(Tracking, LastInnerVertexAlwaysSucceeds) {
  for (int n = 3; n <= 7; ++n) {
    for (const Grove& g : enumerate_groves(n)) EXPECT_TRUE(track_top_r1(g, n - 1).trackable);
  }
}

TEST(Tracking, NonexistentEdgeRejected) {
  EXPECT_THROW(track_edge(grove_A(), 3, 1, RightVertex::nonslack), InvalidArgument);
  EXPECT_THROW(track_edge(grove_A(), 3, 4, RightVertex::slack), InvalidArgument);
  EXPECT_THROW(track_top_r1(grove_A(), 4), InvalidArgument);
}

TEST(Tracking, TrackableIffOffsetsHaveNoZero) {
  for (int n = 3; n <= 8; ++n) {
    for (const Grove& g : enumerate_groves(n)) {
      for (int i = 2; i <= n - 1; ++i) {
        EXPECT_EQ(track_top_r1(g, i).trackable, !grove_offsets(g, i).has_zero());
      }
    }
  }
}

// Tracking an edge (P, e) of a clique's grove succeeds exactly when one route
// of the clique begins with P followed by e.
TEST(Tracking, TrackableIffUniqueExtendingRoute) {
  for (int n = 3; n <= 6; ++n) {
    for (const Clique& c : enumerate_cliques(n)) {
      const Grove g = clique_to_grove(n, c);
      for (int i = 2; i <= n - 1; ++i) {
        const auto left = realized_prefixes(c, i);
        const Tree& t = g.tree(i);
        for (int q = 1; q <= t.left; ++q) {
          if (q <= t.slack_deg) {
            EXPECT_EQ(track_edge(g, i, q, RightVertex::slack).trackable,
                      routes_extending(c, left[static_cast<std::size_t>(q - 1)], slack(i)) == 1);
          }
          if (q >= t.slack_deg) {
            EXPECT_EQ(track_edge(g, i, q, RightVertex::nonslack).trackable,
                      routes_extending(c, left[static_cast<std::size_t>(q - 1)], nonslack(i)) == 1);
          }
        }
      }
    }
  }
}

TEST(GroveOffsets, Examples) {
  EXPECT_TRUE(grove_offsets(grove_A(), 3).entries.empty());
  EXPECT_EQ(to_string(grove_offsets(grove_B(), 2)), "(1)");
  EXPECT_EQ(to_string(grove_offsets(grove_A(), 2)), "(0)");
}

TEST(GroveOffsets, EqualFlowOffsets) {
  for (int n = 3; n <= 8; ++n) {
    for (const Grove& g : enumerate_groves(n)) {
      for (int i = 2; i <= n - 1; ++i) EXPECT_EQ(grove_offsets(g, i), flow_offsets(flow_from_grove(g), i));
    }
  }
}

TEST(GroveMove, Examples) {
  EXPECT_EQ(grove_move(grove_A(), 3, Sign::plus), grove_B());
  EXPECT_EQ(grove_move(grove_B(), 2, Sign::plus), grove_D());
  EXPECT_FALSE(grove_move(grove_B(), 2, Sign::minus).has_value());
  EXPECT_EQ(grove_move(grove_B(), 3, Sign::minus), grove_A());
}

TEST(GroveMove, CommutesWithTheFlowBijection) {
  for (int n = 3; n <= 7; ++n) {
    for (const Grove& g : enumerate_groves(n)) {
      for (int i = 2; i <= n - 1; ++i) {
        for (Sign s : {Sign::plus, Sign::minus}) {
          const auto gm = grove_move(g, i, s);
          const auto fm = flow_move(flow_from_grove(g), i, s);
          ASSERT_EQ(gm.has_value(), fm.has_value());
          if (gm) {
            EXPECT_EQ(grove_violation(*gm), "");
            EXPECT_EQ(flow_from_grove(*gm), *fm);
          }
        }
      }
    }
  }
}

TEST(GroveMove, InnerVertexRangeChecked) {
  EXPECT_THROW(grove_move(grove_A(), 1, Sign::plus), InvalidArgument);
  EXPECT_THROW(grove_move(grove_A(), 4, Sign::plus), InvalidArgument);
  EXPECT_THROW(grove_offsets(grove_A(), 1), InvalidArgument);
}
