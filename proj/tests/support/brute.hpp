#pragma once

// Deliberately naive reference implementations for cross-checking the library.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lip/graph.hpp"

namespace lip::testing {

/// Adjacency matrix, built from the edge list only.
inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edges()) {
    a[u][v] = true;
    a[v][u] = true;
  }
  return a;
}

inline std::uint64_t naive_e_between(const Graph& g, const std::vector<Vertex>& x,
                                     const std::vector<Vertex>& y) {
  const auto a = adjacency_matrix(g);
  std::uint64_t count = 0;
  for (Vertex u : x) {
    for (Vertex v : y) count += a[u][v] ? 1 : 0;
  }
  return count;
}

/// Path check straight from the definition.
inline bool naive_is_induced_path(const Graph& g, const Graph& gp, const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  const auto a = adjacency_matrix(g);
  const auto ap = adjacency_matrix(gp);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.n()) return false;
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (path[i] == path[j]) return false;
      if (j == i + 1 && !ap[path[i]][path[j]]) return false;
      if (j > i + 1 && a[path[i]][path[j]]) return false;
    }
  }
  return true;
}

/// Longest induced path (edge count) by enumerating all vertex subsets: a
/// subset S induces a path iff G[S] is connected, has |S|-1 edges and maximum
/// degree at most 2. Feasible up to n ≈ 16.
inline std::size_t subset_longest_induced_path(const Graph& g) {
  const std::size_t n = g.n();
  const auto a = adjacency_matrix(g);
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (static_cast<std::size_t>(k) - 1 <= best) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) s.push_back(v);
    }
    int edges = 0;
    bool degree_ok = true;
    for (Vertex u : s) {
      int deg = 0;
      for (Vertex v : s) deg += a[u][v] ? 1 : 0;
      edges += deg;
      if (deg > 2) degree_ok = false;
    }
    if (!degree_ok || edges / 2 != k - 1) continue;
    // Connectivity by flood fill inside s.
    std::uint32_t seen = 1u << s[0];
    std::vector<Vertex> stack{s[0]};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : s) {
        if (a[u][v] && !(seen >> v & 1u)) {
          seen |= 1u << v;
          stack.push_back(v);
        }
      }
    }
    if (seen == mask) best = static_cast<std::size_t>(k) - 1;
  }
  return best;
}

/// All k-subsets of 0..n-1.
inline std::vector<std::vector<Vertex>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) s.push_back(v);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// max over (X,Y) of e_{G'}(X,Y) with |X| = sx, |Y| = sy, both enumerated.
inline std::uint64_t brute_max_cond1(const Graph& gp, std::size_t sx, std::size_t sy) {
  std::uint64_t best = 0;
  const auto ys = all_subsets(gp.n(), sy);
  for (const auto& x : all_subsets(gp.n(), sx)) {
    for (const auto& y : ys) best = std::max(best, naive_e_between(gp, x, y));
  }
  return best;
}

/// max over (X,Y) of e_{G'}(Γ_G[X], Y) with |X| = sx, |Y| = sy.
inline std::uint64_t brute_max_cond2(const Graph& g, const Graph& gp, std::size_t sx, std::size_t sy) {
  const auto a = adjacency_matrix(g);
  std::uint64_t best = 0;
  const auto ys = all_subsets(g.n(), sy);
  for (const auto& x : all_subsets(g.n(), sx)) {
    std::vector<Vertex> closed;
    for (Vertex v = 0; v < g.n(); ++v) {
      bool in = std::find(x.begin(), x.end(), v) != x.end();
      for (Vertex u : x) in = in || a[u][v];
      if (in) closed.push_back(v);
    }
    for (const auto& y : ys) best = std::max(best, naive_e_between(gp, closed, y));
  }
  return best;
}

}  // namespace lip::testing
