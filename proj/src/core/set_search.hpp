#pragma once

// Candidate-set helpers shared by the sampled condition checkers.

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "lip/graph.hpp"
#include "lip/rng.hpp"

namespace lip::detail {

inline std::vector<Vertex> top_degree(const Graph& g, std::size_t k) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.resize(std::min(k, order.size()));
  return order;
}

/// Grow a k-set from `seed`, always adding the vertex with the most
/// neighbours already inside (least id on ties).
inline std::vector<Vertex> grow_dense(const Graph& g, Vertex seed, std::size_t k) {
  std::vector<std::uint32_t> links(g.n(), 0);
  std::vector<bool> in(g.n(), false);
  std::vector<Vertex> x;
  Vertex next = seed;
  while (x.size() < k) {
    x.push_back(next);
    in[next] = true;
    for (Vertex w : g.neighbors(next)) ++links[w];
    if (x.size() == k) break;
    Vertex pick = kNoVertex;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!in[v] && (pick == kNoVertex || links[v] > links[pick])) pick = v;
    }
    next = pick;
  }
  return x;
}

/// Top-degree set plus dense growth from the four highest-degree seeds.
inline std::vector<std::vector<Vertex>> greedy_sets(const Graph& g, std::size_t k) {
  std::vector<std::vector<Vertex>> sets;
  sets.push_back(top_degree(g, k));
  for (Vertex s : top_degree(g, 4)) sets.push_back(grow_dense(g, s, k));
  return sets;
}

inline std::vector<Vertex> random_subset(std::size_t n, std::size_t k, SplitMix64& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(all[i], all[j]);
  }
  all.resize(k);
  return all;
}

/// The k vertices with the largest counts (least id on ties) and their sum.
/// `scratch` must have counts.size() entries.
inline std::uint64_t top_by_count(std::span<const std::uint32_t> counts, std::size_t k,
                                  std::vector<Vertex>& scratch, std::vector<Vertex>& out) {
  std::iota(scratch.begin(), scratch.end(), Vertex{0});
  const auto mid = scratch.begin() + static_cast<std::ptrdiff_t>(k);
  std::partial_sort(scratch.begin(), mid, scratch.end(), [&](Vertex a, Vertex b) {
    return counts[a] != counts[b] ? counts[a] > counts[b] : a < b;
  });
  out.assign(scratch.begin(), mid);
  std::uint64_t sum = 0;
  for (Vertex v : out) sum += counts[v];
  return sum;
}

}  // namespace lip::detail
