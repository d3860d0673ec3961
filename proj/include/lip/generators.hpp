#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lip/graph.hpp"

namespace lip {

enum class Model : std::uint8_t { RandomRegular, Gnp, Cycle, Complete, Path, Petersen };

std::string_view to_string(Model model) noexcept;
/// Accepts "random-regular", "gnp", "cycle", "complete", "path", "petersen".
Model parse_model(std::string_view name);

struct GenSpec {
  Model model = Model::Gnp;
  std::size_t n = 0;
  std::size_t d = 0;   // RandomRegular
  double p = 0.0;      // Gnp
  std::uint64_t seed = 0;
};

/// Dispatches on spec.model. Deterministic in (spec, seed).
Graph generate(const GenSpec& spec);

/// Simple d-regular graph by random stub pairing: an invalid pairing (loop or
/// repeated edge) is redrawn, and the whole pairing restarts only when no
/// valid pair remains. Throws GenerationFailure after 1000 restarts.
Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// Binomial random graph, sampled by geometric skipping in O(n + m).
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// Cycle(n ≥ 3), Path(n ≥ 1), Complete(n ≥ 1), Petersen (n ignored).
Graph gen_named(Model model, std::size_t n = 0);

struct CliqueInstance {
  Graph graph;
  /// Vertex-disjoint cliques, each sorted.
  std::vector<std::vector<Vertex>> cliques;
};

/// Union of `base` with `count` vertex-disjoint cliques of `size` vertices
/// placed on a random subset of the vertices.
CliqueInstance gen_clique_superimposed(const Graph& base, std::size_t count, std::size_t size,
                                       std::uint64_t seed);
CliqueInstance gen_clique_superimposed(const GenSpec& base, std::size_t count, std::size_t size,
                                       std::uint64_t seed);

}  // namespace lip
