#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lip/graph.hpp"

namespace lip {

// Exponential-time ground truth for small instances.

struct LongestPathResult {
  std::size_t length = 0;  // edges
  std::vector<Vertex> path;
};

/// Longest induced path of g by exhaustive extension search. Each partial
/// path may only be extended by a neighbour of its tip that has no other
/// neighbour on the path. Throws GuardExceeded when n > max_n.
LongestPathResult longest_induced_path_exact(const Graph& g, std::size_t max_n = 24);

struct ConditionWitness {
  VertexSet x;
  VertexSet y;
  std::uint64_t value = 0;
};

/// Status of the two sparsity conditions under which the search is guaranteed
/// to find a G'-path of length ℓ that is induced in G:
///   (1) e_{G'}(X,Y) < d/4·s1          for |X| = s1,   |Y| = ℓ+s1+s2
///   (2) e_{G'}(Γ_G[X],Y) < d/4·s2     for |X| = ℓ+s1, |Y| = s2
/// The witnesses are the worst pairs seen. Inequalities are strict, so a zero
/// bound (d = 0) always fails.
struct ConditionReport {
  std::size_t l = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  double d = 0.0;
  bool exhaustive = true;
  bool cond1_holds = false;
  bool cond2_holds = false;
  double bound1 = 0.0;
  double bound2 = 0.0;
  ConditionWitness worst1;
  ConditionWitness worst2;
  /// Number of X sets examined; each is paired with its maximizing Y.
  std::uint64_t sets_checked = 0;

  bool both_hold() const noexcept { return cond1_holds && cond2_holds; }
};

/// Exact check. For a fixed X both e(X,·) and e(Γ_G[X],·) are sums of
/// per-vertex counts, so the maximizing Y is the |Y| vertices with the largest
/// counts; only X is enumerated. Throws GuardExceeded when C(n,|X|) exceeds
/// `guard` for either condition, InvalidArgument when sizes do not fit in V.
ConditionReport check_sparsity_conditions_exact(const GraphPair& pair, std::size_t l,
                                                std::size_t s1, std::size_t s2,
                                                double guard = 1e8,
                                                std::optional<double> d = std::nullopt);

/// Sampled check: greedy sets (top G'-degree, greedy densest growth) followed
/// by uniformly random X, each paired with its maximizing Y. A violation is
/// definitive; `cond*_holds == true` only means none was found
/// (`exhaustive == false`). samples = 0 checks nothing.
ConditionReport check_sparsity_conditions_sampled(const GraphPair& pair, std::size_t l,
                                                  std::size_t s1, std::size_t s2,
                                                  std::size_t samples, std::uint64_t seed,
                                                  std::optional<double> d = std::nullopt);

/// C(n, k) as a double (saturating to +inf).
double binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace lip
