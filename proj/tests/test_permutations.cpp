#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/testing.hpp"

using namespace zzflow;

TEST(Permutations, ParseAndFormat) {
  EXPECT_EQ(parse_perm("45231"), (Permutation{4, 5, 2, 3, 1}));
  EXPECT_EQ(perm_str({3, 4, 2, 5, 1}), "34251");
  EXPECT_THROW(parse_perm("4a2"), InvalidArgument);
}

TEST(Permutations, AlternatingCheck) {
  EXPECT_TRUE(is_alternating(parse_perm("34251")));
  EXPECT_FALSE(is_alternating(parse_perm("43251")));
  EXPECT_FALSE(is_alternating(parse_perm("3425")));  // not a permutation of 1..4
  EXPECT_TRUE(is_permutation_of_n(parse_perm("2413")));
  EXPECT_FALSE(is_permutation_of_n(parse_perm("2213")));
}

TEST(Permutations, AlternatingCountsAndOrder) {
  for (int n = 3; n <= 9; ++n) {
    const auto perms = alternating_perms(n);
    EXPECT_EQ(static_cast<long long>(perms.size()), zztest::alternating_count_by_search(n));
    EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
    for (const auto& p : perms) EXPECT_TRUE(is_alternating(p));
  }
}

TEST(Permutations, InverseRoundTrip) {
  const Permutation p = parse_perm("35142");
  EXPECT_EQ(inverse(inverse(p)), p);
  EXPECT_EQ(inverse(parse_perm("45231")), parse_perm("53412"));
}

TEST(SwapStat, Examples) {
  EXPECT_EQ(swap_stat(parse_perm("34251")), 1);
  EXPECT_EQ(swap_stat(parse_perm("45231")), 0);
  EXPECT_EQ(swap_stat(parse_perm("15243")), 2);
  EXPECT_EQ(swap_stat(parse_perm("14253")), 3);
  EXPECT_THROW(swap_stat(parse_perm("12345")), InvalidArgument);
}

// swap counts non-adjacent consecutive values: k and k+1 with |pos(k) - pos(k+1)| > 1
// and k left of k+1.
TEST(SwapStat, MatchesDirectPositionScan) {
  for (int n = 3; n <= 8; ++n) {
    for (const Permutation& a : alternating_perms(n)) {
      int direct = 0;
      for (int k = 1; k < n; ++k) {
        const auto pk = std::find(a.begin(), a.end(), k) - a.begin();
        const auto pk1 = std::find(a.begin(), a.end(), k + 1) - a.begin();
        if (pk1 - pk > 1) ++direct;
      }
      EXPECT_EQ(swap_stat(a), direct) << perm_str(a);
    }
  }
}

TEST(RegionSets, ExtremeSetsGiveOuterRoutes) {
  EXPECT_EQ(route_from_region_set(4, {})->str(), "y0y2");
  EXPECT_EQ(route_from_region_set(4, {1, 2, 3, 4})->str(), "y1y3");
  EXPECT_EQ(route_from_region_set(5, {})->str(), "y0y2y4");
  EXPECT_EQ(route_from_region_set(5, {1, 2, 3, 4, 5})->str(), "y1y3");
}

TEST(RegionSets, InvalidSetsGiveNoRoute) {
  EXPECT_FALSE(route_from_region_set(4, {2}).has_value());
  EXPECT_THROW(route_from_region_set(4, {0}), InvalidArgument);
  EXPECT_THROW(route_from_region_set(4, {5}), InvalidArgument);
}

TEST(RegionSets, EveryRouteComesFromExactlyOneSet) {
  for (int n = 3; n <= 8; ++n) {
    std::set<Route> got;
    int valid = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::set<int> below;
      for (int r = 1; r <= n; ++r) {
        if (mask >> (r - 1) & 1U) below.insert(r);
      }
      if (auto route = route_from_region_set(n, below)) {
        ++valid;
        got.insert(*route);
      }
    }
    EXPECT_EQ(got.size(), enumerate_routes(n).size());
    EXPECT_EQ(static_cast<std::size_t>(valid), got.size());
  }
}

TEST(AltPermToClique, BaseCliqueFromIdentityCycle) {
  EXPECT_EQ(clique_to_flow(5, alt_perm_to_clique(parse_perm("34251"))), base_flow(5));
}

TEST(AltPermToClique, WorkedExampleRoutes) {
  const Clique c = alt_perm_to_clique(parse_perm("45231"));
  EXPECT_EQ(c, zztest::clique_of(5, {"y0y2y4", "y0y2x4", "y0x2x3x4", "y0x2y3", "x1x2y3", "y1y3"}));
}

// These are cliques of the planar framing, so they are compared with the
// flows rather than with the enumerated cliques.
TEST(AltPermToClique, FlowImageIsABijection) {
  for (int n = 3; n <= 8; ++n) {
    std::vector<IntegerFlow> image;
    for (const Permutation& a : alternating_perms(n)) {
      const Clique c = alt_perm_to_clique(a);
      EXPECT_EQ(c.routes.size(), static_cast<std::size_t>(n + 1));
      image.push_back(clique_to_flow(n, c));
    }
    std::sort(image.begin(), image.end());
    EXPECT_EQ(image, enumerate_flows(n)) << n;
  }
}

TEST(AltPermToClique, ThreeGivesPlanarCliques) {
  std::vector<std::string> got;
  for (const Permutation& a : alternating_perms(3)) {
    std::string s;
    for (const Route& r : alt_perm_to_clique(a).routes) s += r.str() + " ";
    got.push_back(s);
  }
  EXPECT_EQ(got, (std::vector<std::string>{"x1x2 x1y2 y0y2 y1 ", "x1x2 y0x2 y0y2 y1 "}));
}

TEST(AltPermToClique, RejectsNonAlternating) {
  EXPECT_THROW(alt_perm_to_clique(parse_perm("12345")), InvalidArgument);
}

TEST(FlowToCyclic, BaseFlowGivesIdentity) {
  for (int n = 3; n <= 8; ++n) {
    Permutation id(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k + 1;
    EXPECT_EQ(flow_to_cyclic(base_flow(n)).linear(), id);
  }
}

TEST(FlowToCyclic, Examples) {
  // y_2 = 1: 3 skips the 0 that follows 2 and lands after it; y_3 = 0 puts 4 right after 3.
  EXPECT_EQ(flow_to_cyclic(zztest::flow_D()).circle, (std::vector<int>{0, 3, 4, 1, 2}));
  EXPECT_EQ(flow_to_cyclic(zztest::flow_E()).linear(), parse_perm("3142"));
}

TEST(FlowToCyclic, BijectionOntoPermutations) {
  for (int n = 3; n <= 8; ++n) {
    std::set<Permutation> seen;
    for (const IntegerFlow& f : enumerate_flows(n)) {
      const CyclicPerm c = flow_to_cyclic(f);
      EXPECT_EQ(c.circle.front(), 0);
      Permutation sorted = c.linear();
      std::sort(sorted.begin(), sorted.end());
      for (int k = 0; k < n; ++k) ASSERT_EQ(sorted[static_cast<std::size_t>(k)], k + 1);
      seen.insert(c.linear());
    }
    EXPECT_EQ(seen.size(), enumerate_flows(n).size());
  }
}

TEST(DesStat, Examples) {
  EXPECT_EQ(des_stat(parse_perm("12345")), 0);
  EXPECT_EQ(des_stat(parse_perm("53142")), 3);
  EXPECT_EQ(des_stat(parse_perm("14523")), 1);
  EXPECT_EQ(des_stat({}), 0);
}
