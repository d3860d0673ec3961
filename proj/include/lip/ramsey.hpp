#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lip/graph.hpp"

namespace lip {

enum class ColoringStrategy : std::uint8_t { UniformRandom, AdversarialBalanced };

std::string_view to_string(ColoringStrategy strategy) noexcept;
/// "uniform" or "balanced".
ColoringStrategy parse_strategy(std::string_view name);

/// Graph with one colour in 0..k-1 per edge.
class ColoredGraph {
 public:
  ColoredGraph(Graph g, std::size_t k, std::vector<std::uint16_t> slot_colors);

  const Graph& graph() const noexcept { return g_; }
  std::size_t k() const noexcept { return k_; }
  /// Colour of edge uv. The edge must exist.
  std::uint16_t color(Vertex u, Vertex v) const;
  /// Number of edges in each colour class.
  std::vector<std::size_t> class_sizes() const;
  /// Edges of colour c on the full vertex set.
  Graph color_class(std::uint16_t c) const;

 private:
  Graph g_;
  std::size_t k_;
  std::vector<std::uint16_t> slot_colors_;  // aligned with the CSR adjacency
};

/// UniformRandom colours edges i.i.d.; AdversarialBalanced walks the
/// canonical edge list and gives each edge the colour minimizing the sum of
/// its endpoints' degrees in that colour (least index on ties).
ColoredGraph color_edges(Graph g, std::size_t k, ColoringStrategy strategy, std::uint64_t seed);

struct DensestClass {
  Graph graph;
  std::uint16_t color = 0;
};

/// Colour class with the most edges, least index on ties.
DensestClass densest_color_class(const ColoredGraph& cg);

struct PeelResult {
  /// Surviving subgraph; vertex i is survivors[i].
  Graph g_prime;
  std::vector<Vertex> survivors;
  std::vector<Vertex> removed_order;
  double input_average_degree = 0.0;
  double survivor_average_degree = 0.0;
  /// Average degree never dropped during any single removal.
  bool average_monotone = true;
};

/// Repeatedly removes the least-id vertex whose current degree is below
/// `threshold`. The survivor set (the threshold-core) does not depend on the
/// removal order.
PeelResult peel_min_degree(const Graph& g0, double threshold);

struct RamseyParams {
  std::size_t n = 0;
  std::size_t k = 2;
  double c = 8.0;
  ColoringStrategy strategy = ColoringStrategy::UniformRandom;
  /// Replaces c·ln(k)/n; needed for k = 1, where ln k = 0.
  std::optional<double> p_override;

  std::size_t vertex_count() const noexcept { return n * k; }
  double p() const;
  /// c·ln(k)/4.
  double peel_threshold() const;
  /// ⌊n / (c³ ln k)⌋; absent for k = 1.
  std::optional<std::size_t> target_len() const;
};

struct RamseyReport {
  std::uint64_t seed = 0;
  std::size_t vertex_count = 0;
  double p = 0.0;
  std::size_t m_g = 0;
  std::size_t m_densest = 0;
  std::uint16_t densest_color = 0;
  double threshold = 0.0;
  std::size_t survivor_n = 0;
  std::size_t survivor_min_degree = 0;
  double input_average_degree = 0.0;
  double survivor_average_degree = 0.0;
  bool average_monotone = false;
  std::size_t found_len = 0;
  std::optional<std::size_t> target_len;
  bool target_met = false;
  /// Witness in original vertex ids.
  std::vector<Vertex> witness;
  bool monochromatic = false;
  bool induced_in_restricted = false;
  bool induced_in_full = false;
  bool peel_min_degree_ok = false;
  bool checks_passed = false;
  /// Empty unless the pipeline could not run (e.g. nothing survived peeling).
  std::string failure;
};

/// Samples G(nk, p), colours it, keeps the densest class, peels it at
/// threshold c·ln(k)/4 to G', and runs the induced-path search on
/// (G[V(G')], G') with the target length. The witness is checked for being
/// monochromatic and induced in both G[V(G')] and G.
RamseyReport run_ramsey_pipeline(const RamseyParams& params, std::uint64_t seed);

}  // namespace lip
