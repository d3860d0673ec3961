#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "fixtures.hpp"
#include "lip/error.hpp"
#include "lip/generators.hpp"
#include "lip/oracle.hpp"
#include "lip/rng.hpp"
#include "lip/spectral.hpp"

using namespace lip;

TEST(SplitMix64, ReferenceSequence) {
  // Published reference outputs for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix64, BoundedDrawsInRange) {
  SplitMix64 rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) {
    EXPECT_GT(h, 850);
    EXPECT_LT(h, 1150);
  }
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RandomRegular, SmallCases) {
  const auto g = gen_random_regular(10, 3, 1);
  EXPECT_EQ(g.n(), 10u);
  EXPECT_TRUE(g.is_regular());
  EXPECT_EQ(g.min_degree(), 3u);
  EXPECT_EQ(g.m(), 15u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c4 = gen_random_regular(4, 2, seed);
    EXPECT_TRUE(c4.is_regular());
    EXPECT_EQ(c4.min_degree(), 2u);
    EXPECT_EQ(c4.m(), 4u);
  }
}

TEST(RandomRegular, Errors) {
  EXPECT_THROW(gen_random_regular(5, 3, 1), InvalidArgument);
  EXPECT_THROW(gen_random_regular(4, 4, 1), InvalidArgument);
}

TEST(RandomRegular, ManySeedsAreSimpleAndRegular) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t d = 3 + seed % 8;
    const std::size_t n = 2 * (20 + seed);
    const auto g = gen_random_regular(n, d, seed);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.max_degree(), d);
    EXPECT_TRUE(alon_boppana_check(n, d, compute_lambda(g).lambda));
  }
}

TEST(RandomRegular, Deterministic) {
  EXPECT_EQ(gen_random_regular(200, 6, 9), gen_random_regular(200, 6, 9));
  EXPECT_NE(gen_random_regular(200, 6, 9), gen_random_regular(200, 6, 10));
}

TEST(Gnp, Extremes) {
  EXPECT_EQ(gen_gnp(20, 0.0, 1).m(), 0u);
  EXPECT_EQ(gen_gnp(20, 1.0, 1), lip::testing::complete(20));
  EXPECT_THROW(gen_gnp(20, 1.5, 1), InvalidArgument);
  EXPECT_THROW(gen_gnp(20, -0.1, 1), InvalidArgument);
}

TEST(Gnp, EdgeCountNearMean) {
  // m ~ Bin(C(2000,2), 0.01): mean 19990, sd ~ 140.
  const auto g = gen_gnp(2000, 0.01, 42);
  EXPECT_NEAR(static_cast<double>(g.m()), 19990.0, 700.0);
}

TEST(Gnp, PairsAreUniform) {
  // Each pair should be hit about 0.3 of the time across seeds.
  std::vector<int> hits(15, 0);
  const int runs = 2000;
  for (int s = 0; s < runs; ++s) {
    const auto g = gen_gnp(6, 0.3, static_cast<std::uint64_t>(s));
    int idx = 0;
    for (Vertex u = 0; u < 6; ++u) {
      for (Vertex v = u + 1; v < 6; ++v, ++idx) hits[idx] += g.has_edge(u, v) ? 1 : 0;
    }
  }
  for (int h : hits) EXPECT_NEAR(h / static_cast<double>(runs), 0.3, 0.05);
}

TEST(NamedGraphs, Shapes) {
  EXPECT_EQ(gen_named(Model::Cycle, 7), lip::testing::cycle(7));
  EXPECT_EQ(gen_named(Model::Path, 5), lip::testing::path_graph(5));
  EXPECT_EQ(gen_named(Model::Complete, 6), lip::testing::complete(6));
  EXPECT_EQ(gen_named(Model::Petersen), lip::testing::petersen());
  EXPECT_THROW(gen_named(Model::Cycle, 2), InvalidArgument);
}

TEST(NamedGraphs, ModelNames) {
  for (auto m : {Model::RandomRegular, Model::Gnp, Model::Cycle, Model::Complete, Model::Path,
                 Model::Petersen}) {
    EXPECT_EQ(parse_model(to_string(m)), m);
  }
  EXPECT_THROW(parse_model("hypercube"), InvalidArgument);
}

TEST(Generate, DispatchesOnModel) {
  GenSpec spec;
  spec.model = Model::RandomRegular;
  spec.n = 30;
  spec.d = 4;
  spec.seed = 3;
  EXPECT_EQ(generate(spec), gen_random_regular(30, 4, 3));
  spec.model = Model::Gnp;
  spec.p = 0.2;
  EXPECT_EQ(generate(spec), gen_gnp(30, 0.2, 3));
}

TEST(CliqueSuperimposed, DisjointCliquesOnEmptyBase) {
  const auto inst = gen_clique_superimposed(Graph::from_edges(12, {}), 3, 4, 1);
  EXPECT_EQ(inst.graph.m(), 18u);
  ASSERT_EQ(inst.cliques.size(), 3u);
  std::set<Vertex> covered;
  for (const auto& c : inst.cliques) {
    EXPECT_EQ(c.size(), 4u);
    for (Vertex u : c) {
      EXPECT_TRUE(covered.insert(u).second);
      for (Vertex v : c) {
        if (u != v) EXPECT_TRUE(inst.graph.has_edge(u, v));
      }
    }
  }
}

TEST(CliqueSuperimposed, ContainsBase) {
  const auto base = gen_gnp(200, 0.02, 5);
  const auto inst = gen_clique_superimposed(base, 20, 10, 6);
  for (auto [u, v] : base.edges()) EXPECT_TRUE(inst.graph.has_edge(u, v));
  for (const auto& c : inst.cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_TRUE(inst.graph.has_edge(c[i], c[j]));
    }
  }
  EXPECT_THROW(gen_clique_superimposed(base, 21, 10, 6), InvalidArgument);
}

TEST(CliqueSuperimposed, InducedPathsUseAtMostTwoPerClique) {
  const auto base = gen_gnp(200, 0.02, 8);
  const auto inst = gen_clique_superimposed(base, 20, 10, 9);
  std::vector<int> clique_of(200, -1);
  for (std::size_t c = 0; c < inst.cliques.size(); ++c) {
    for (Vertex v : inst.cliques[c]) clique_of[v] = static_cast<int>(c);
  }
  SplitMix64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vertex> all(200);
    for (Vertex v = 0; v < 200; ++v) all[v] = v;
    rng.shuffle(std::span<Vertex>(all));
    std::vector<Vertex> keep(all.begin(), all.begin() + 20);
    std::sort(keep.begin(), keep.end());
    const auto sub = inst.graph.induced(keep);
    const auto best = longest_induced_path_exact(sub);
    std::vector<int> per_clique(20, 0);
    for (Vertex v : best.path) {
      EXPECT_LE(++per_clique[clique_of[keep[v]]], 2);
    }
  }
}
