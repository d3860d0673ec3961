#include <gtest/gtest.h>

#include "brute.hpp"
#include "fixtures.hpp"
#include "lip/error.hpp"
#include "lip/generators.hpp"
#include "lip/induced_dfs.hpp"
#include "lip/oracle.hpp"

using namespace lip;
using lip::testing::random_pair;

TEST(LongestInducedPath, PinnedValues) {
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_EQ(longest_induced_path_exact(lip::testing::complete(n)).length, 1u) << n;
  }
  EXPECT_EQ(longest_induced_path_exact(lip::testing::cycle(5)).length, 3u);
  const auto p = longest_induced_path_exact(lip::testing::petersen());
  EXPECT_EQ(p.length, 4u);
  EXPECT_EQ(p.path.size(), 5u);
  EXPECT_TRUE(verify_induced_path(GraphPair(lip::testing::petersen()), p.path));
}

TEST(LongestInducedPath, TrivialGraphs) {
  EXPECT_EQ(longest_induced_path_exact(Graph::from_edges(1, {})).length, 0u);
  EXPECT_EQ(longest_induced_path_exact(Graph::from_edges(4, {})).path.size(), 1u);
  EXPECT_EQ(longest_induced_path_exact(lip::testing::path_graph(7)).length, 6u);
  EXPECT_EQ(longest_induced_path_exact(lip::testing::cycle(8)).length, 6u);
}

TEST(LongestInducedPath, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 5 + seed % 8;
    const auto g = gen_gnp(n, 0.2 + 0.01 * static_cast<double>(seed % 40), seed);
    const auto r = longest_induced_path_exact(g);
    EXPECT_EQ(r.length, lip::testing::subset_longest_induced_path(g)) << "seed " << seed;
    EXPECT_EQ(r.path.size(), r.length + 1);
    EXPECT_TRUE(lip::testing::naive_is_induced_path(g, g, r.path));
  }
}

TEST(LongestInducedPath, Guard) {
  EXPECT_THROW(longest_induced_path_exact(lip::testing::cycle(25)), GuardExceeded);
  EXPECT_NO_THROW(longest_induced_path_exact(lip::testing::cycle(25), 25));
}

TEST(SparsityConditionsExact, CompleteGraphExample) {
  const GraphPair pair(lip::testing::complete(4));
  const auto r = check_sparsity_conditions_exact(pair, 1, 1, 1);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.worst1.value, 3u);
  EXPECT_DOUBLE_EQ(r.bound1, 0.75);
  EXPECT_FALSE(r.cond1_holds);
  EXPECT_EQ(r.worst1.x.size(), 1u);
  EXPECT_EQ(r.worst1.y.size(), 3u);
  EXPECT_EQ(r.worst2.x.size(), 2u);
  EXPECT_EQ(r.worst2.y.size(), 1u);
}

TEST(SparsityConditionsExact, EmptyGraphDegenerateBound) {
  const GraphPair pair(Graph::from_edges(6, {}));
  const auto r = check_sparsity_conditions_exact(pair, 1, 1, 1);
  EXPECT_EQ(r.d, 0.0);
  EXPECT_EQ(r.worst1.value, 0u);
  EXPECT_EQ(r.worst2.value, 0u);
  EXPECT_FALSE(r.cond1_holds);
  EXPECT_FALSE(r.cond2_holds);
}

TEST(SparsityConditionsExact, MatchesPairEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto pair = random_pair(8, 0.45, 0.7, 70 + seed);
    const std::size_t l = 1 + seed % 2, s1 = 1 + seed % 3, s2 = 1 + (seed / 2) % 2;
    const auto r = check_sparsity_conditions_exact(pair, l, s1, s2);
    EXPECT_EQ(r.worst1.value, lip::testing::brute_max_cond1(pair.g_prime(), s1, l + s1 + s2));
    EXPECT_EQ(r.worst2.value, lip::testing::brute_max_cond2(pair.g(), pair.g_prime(), l + s1, s2));
    // The reported witnesses attain the reported values.
    EXPECT_EQ(e_between(pair.g_prime(), r.worst1.x, r.worst1.y), r.worst1.value);
    EXPECT_EQ(e_between(pair.g_prime(), gamma_closed(pair.g(), r.worst2.x), r.worst2.y),
              r.worst2.value);
    EXPECT_EQ(r.cond1_holds, static_cast<double>(r.worst1.value) < r.bound1);
  }
}

TEST(SparsityConditionsExact, ExplicitDegree) {
  const GraphPair pair(lip::testing::cycle(8));
  const auto r = check_sparsity_conditions_exact(pair, 1, 1, 1, 1e8, 40.0);
  EXPECT_DOUBLE_EQ(r.bound1, 10.0);
  EXPECT_TRUE(r.both_hold());
}

TEST(SparsityConditionsExact, Validation) {
  const GraphPair pair(lip::testing::cycle(6));
  EXPECT_THROW(check_sparsity_conditions_exact(pair, 0, 1, 1), InvalidArgument);
  EXPECT_THROW(check_sparsity_conditions_exact(pair, 1, 3, 3), InvalidArgument);
  EXPECT_THROW(check_sparsity_conditions_exact(pair, 4, 1, 2), InvalidArgument);
  const GraphPair big(lip::testing::cycle(60));
  EXPECT_THROW(check_sparsity_conditions_exact(big, 5, 10, 5, 1e6), GuardExceeded);
}

TEST(SparsityConditionsSampled, NeverWorseThanExact) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto pair = random_pair(10, 0.4, 0.8, 200 + seed);
    const auto exact = check_sparsity_conditions_exact(pair, 1, 2, 1);
    const auto sampled = check_sparsity_conditions_sampled(pair, 1, 2, 1, 20, seed);
    EXPECT_FALSE(sampled.exhaustive);
    EXPECT_LE(sampled.worst1.value, exact.worst1.value);
    EXPECT_LE(sampled.worst2.value, exact.worst2.value);
    if (exact.cond1_holds) EXPECT_TRUE(sampled.cond1_holds);
    if (exact.cond2_holds) EXPECT_TRUE(sampled.cond2_holds);
  }
}

TEST(SparsityConditionsSampled, FindsExactViolations) {
  int violations = 0, found = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto pair = random_pair(11, 0.35, 1.0, 600 + seed);
    const auto exact = check_sparsity_conditions_exact(pair, 1, 2, 2);
    if (exact.cond1_holds) continue;
    ++violations;
    found += check_sparsity_conditions_sampled(pair, 1, 2, 2, 16, seed).cond1_holds ? 0 : 1;
  }
  ASSERT_GT(violations, 0);
  EXPECT_GE(found * 10, violations * 9);
}

TEST(SparsityConditionsSampled, ZeroSamples) {
  const GraphPair pair(lip::testing::cycle(8));
  const auto r = check_sparsity_conditions_sampled(pair, 1, 1, 1, 0, 1);
  EXPECT_EQ(r.sets_checked, 0u);
  EXPECT_FALSE(r.exhaustive);
}

TEST(SparsityConditionsSampled, CliqueInsideXIsDetected) {
  const auto base = Graph::from_edges(120, {});
  const auto inst = gen_clique_superimposed(base, 10, 12, 4);
  const GraphPair pair(inst.graph);
  // X = 4 vertices of one clique, Y = the rest of it: 4·8 + 12 ordered pairs.
  const auto r = check_sparsity_conditions_sampled(pair, 4, 4, 4, 8, 1, 11.0);
  EXPECT_FALSE(r.cond1_holds);
  EXPECT_GE(r.worst1.value, 4u * 11u);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(10, 3), 120.0);
  EXPECT_EQ(binomial(5, 0), 1.0);
  EXPECT_EQ(binomial(3, 5), 0.0);
}
