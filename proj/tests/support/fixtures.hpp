#pragma once

#include <vector>

#include "lip/graph.hpp"

namespace lip::testing {

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph petersen() {
  return Graph::from_edges(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                                 {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline VertexSet set_of(std::size_t n, std::vector<Vertex> members) {
  return VertexSet(n, members);
}

}  // namespace lip::testing

#include "lip/generators.hpp"
#include "lip/rng.hpp"

namespace lip::testing {

/// G ~ G(n, p) and G' keeping each edge of G with probability `keep`.
inline GraphPair random_pair(std::size_t n, double p, double keep, std::uint64_t seed) {
  Graph g = gen_gnp(n, p, seed);
  if (keep >= 1.0) return GraphPair(std::move(g));
  SplitMix64 rng(seed ^ 0xABCDEFull);
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (rng.bernoulli(keep)) kept.push_back(e);
  }
  Graph gp = Graph::from_edges(n, kept);
  return GraphPair(std::move(g), std::move(gp));
}

}  // namespace lip::testing
