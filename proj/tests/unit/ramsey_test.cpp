#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "lip/error.hpp"
#include "lip/generators.hpp"
#include "lip/ramsey.hpp"
#include "lip/rng.hpp"

using namespace lip;

namespace {

/// Peels in a random order by rescanning; survivor set only.
std::vector<Vertex> naive_core(const Graph& g, double threshold, std::uint64_t seed) {
  std::vector<bool> alive(g.n(), true);
  SplitMix64 rng(seed);
  while (true) {
    std::vector<Vertex> low;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (Vertex w : g.neighbors(v)) deg += alive[w] ? 1 : 0;
      if (static_cast<double>(deg) < threshold) low.push_back(v);
    }
    if (low.empty()) break;
    alive[low[rng.below(low.size())]] = false;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(ColorEdges, EveryEdgeColouredConsistently) {
  const auto g = gen_gnp(100, 0.1, 1);
  const auto cg = color_edges(g, 3, ColoringStrategy::UniformRandom, 2);
  std::size_t total = 0;
  for (auto s : cg.class_sizes()) total += s;
  EXPECT_EQ(total, g.m());
  for (auto [u, v] : g.edges()) {
    EXPECT_EQ(cg.color(u, v), cg.color(v, u));
    EXPECT_LT(cg.color(u, v), 3);
  }
  EXPECT_THROW(cg.color(0, 0), InvalidArgument);
  EXPECT_THROW(color_edges(g, 0, ColoringStrategy::UniformRandom, 1), InvalidArgument);
}

TEST(ColorEdges, BalancedSpreadsDegrees) {
  const auto g = gen_gnp(300, 0.1, 3);
  auto spread = [&](const ColoredGraph& cg) {
    std::size_t total = 0;
    for (std::uint32_t v = 0; v < g.n(); ++v) {
      std::vector<std::size_t> deg(3, 0);
      for (auto w : g.neighbors(v)) ++deg[cg.color(v, w)];
      const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
      total += *hi - *lo;
    }
    return total;
  };
  const auto balanced = color_edges(g, 3, ColoringStrategy::AdversarialBalanced, 0);
  const auto uniform = color_edges(g, 3, ColoringStrategy::UniformRandom, 0);
  EXPECT_LT(2 * spread(balanced), spread(uniform));
}

TEST(ColorEdges, ClassesPartitionTheGraph) {
  const auto g = gen_gnp(60, 0.2, 4);
  const auto cg = color_edges(g, 4, ColoringStrategy::UniformRandom, 5);
  std::size_t total = 0;
  for (std::uint16_t c = 0; c < 4; ++c) {
    const auto h = cg.color_class(c);
    total += h.m();
    for (auto [u, v] : h.edges()) EXPECT_EQ(cg.color(u, v), c);
  }
  EXPECT_EQ(total, g.m());
}

TEST(DensestClass, AtLeastAverageAndLeastIndexOnTies) {
  const auto g = gen_gnp(200, 0.05, 6);
  for (std::size_t k : {1, 2, 3, 5}) {
    const auto cg = color_edges(g, k, ColoringStrategy::UniformRandom, k);
    const auto best = densest_color_class(cg);
    EXPECT_GE(best.graph.m(), (g.m() + k - 1) / k);
  }
  const auto cg = ColoredGraph(lip::testing::path_graph(3), 2, {0, 0, 1, 1});
  EXPECT_EQ(densest_color_class(cg).color, 0);
}

TEST(Peel, StarCollapses) {
  const auto star = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const auto r = peel_min_degree(star, 2.0);
  EXPECT_TRUE(r.survivors.empty());
  EXPECT_EQ(r.removed_order.front(), 1u);
  EXPECT_FALSE(r.average_monotone);
}

TEST(Peel, SurvivorsMeetThreshold) {
  const auto g = gen_gnp(500, 0.01, 7);
  const auto r = peel_min_degree(g, 3.0);
  EXPECT_GE(static_cast<double>(r.g_prime.min_degree()), r.survivors.empty() ? 0.0 : 3.0);
  EXPECT_EQ(r.survivors.size() + r.removed_order.size(), 500u);
  EXPECT_EQ(r.g_prime, g.induced(r.survivors));
}

TEST(Peel, CoreIsOrderIndependent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gen_gnp(80, 0.04 + 0.0005 * static_cast<double>(seed), seed);
    const double threshold = 2.0 + static_cast<double>(seed % 3);
    EXPECT_EQ(peel_min_degree(g, threshold).survivors, naive_core(g, threshold, seed)) << seed;
  }
}

TEST(Peel, AverageDegreeGrowsWhenThresholdIsLow) {
  const auto g = gen_gnp(5000, 0.004, 9);
  const auto r = peel_min_degree(g, g.average_degree() / 2.0);
  EXPECT_TRUE(r.average_monotone);
  EXPECT_GE(r.survivor_average_degree, r.input_average_degree);
}

TEST(RamseyParams, Formulas) {
  RamseyParams p;
  p.n = 20000;
  p.k = 3;
  p.c = 8.0;
  EXPECT_NEAR(p.p(), 8.0 * std::log(3.0) / 20000.0, 1e-15);
  EXPECT_NEAR(p.peel_threshold(), 2.0 * std::log(3.0), 1e-12);
  EXPECT_EQ(p.target_len(), std::optional<std::size_t>(35));
  p.k = 1;
  EXPECT_FALSE(p.target_len().has_value());
}

TEST(RamseyPipeline, SingleColourCompleteGraph) {
  RamseyParams p;
  p.n = 12;
  p.k = 1;
  p.p_override = 1.0;
  const auto r = run_ramsey_pipeline(p, 3);
  EXPECT_EQ(r.m_g, 66u);
  EXPECT_EQ(r.found_len, 1u);
  EXPECT_TRUE(r.checks_passed);
  EXPECT_FALSE(r.target_met);
}

TEST(RamseyPipeline, WitnessChecks) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RamseyParams p;
    p.n = 2000;
    p.k = 2 + seed % 2;
    p.c = 8.0;
    p.strategy = seed % 2 ? ColoringStrategy::AdversarialBalanced : ColoringStrategy::UniformRandom;
    const auto r = run_ramsey_pipeline(p, seed);
    ASSERT_TRUE(r.failure.empty());
    EXPECT_TRUE(r.monochromatic);
    EXPECT_TRUE(r.induced_in_restricted);
    EXPECT_TRUE(r.induced_in_full);
    EXPECT_TRUE(r.peel_min_degree_ok);
    EXPECT_TRUE(r.checks_passed);
    EXPECT_EQ(r.witness.size(), r.found_len + 1);
  }
}

TEST(RamseyPipeline, EmptySurvivorsReported) {
  RamseyParams p;
  p.n = 50;
  p.k = 2;
  p.c = 8.0;
  p.p_override = 0.001;
  const auto r = run_ramsey_pipeline(p, 1);
  EXPECT_EQ(r.survivor_n, 0u);
  EXPECT_FALSE(r.failure.empty());
  EXPECT_FALSE(r.checks_passed);
}

TEST(RamseyPipeline, RejectsBadParameters) {
  RamseyParams p;
  p.n = 100;
  p.k = 1;
  EXPECT_THROW(run_ramsey_pipeline(p, 1), InvalidArgument);
  p.k = 2;
  p.c = 1000.0;
  EXPECT_THROW(run_ramsey_pipeline(p, 1), InvalidArgument);
}
