#include "lip/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <queue>

#include "lip/error.hpp"
#include "lip/generators.hpp"
#include "lip/induced_dfs.hpp"
#include "lip/rng.hpp"

namespace lip {

std::string_view to_string(ColoringStrategy strategy) noexcept {
  return strategy == ColoringStrategy::UniformRandom ? "uniform" : "balanced";
}

ColoringStrategy parse_strategy(std::string_view name) {
  if (name == "uniform") return ColoringStrategy::UniformRandom;
  if (name == "balanced") return ColoringStrategy::AdversarialBalanced;
  throw InvalidArgument("unknown colouring strategy \"" + std::string(name) + "\"");
}

ColoredGraph::ColoredGraph(Graph g, std::size_t k, std::vector<std::uint16_t> slot_colors)
    : g_(std::move(g)), k_(k), slot_colors_(std::move(slot_colors)) {
  if (k_ < 1 || k_ > 65535) throw InvalidArgument("colour count must be in 1..65535");
  if (slot_colors_.size() != 2 * g_.m()) throw InvalidArgument("one colour per adjacency slot expected");
}

std::uint16_t ColoredGraph::color(Vertex u, Vertex v) const {
  const auto s = g_.slot(u, v);
  if (s < 0) throw InvalidArgument("no edge " + std::to_string(u) + "-" + std::to_string(v));
  return slot_colors_[g_.slot_base(u) + static_cast<std::size_t>(s)];
}

std::vector<std::size_t> ColoredGraph::class_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (Vertex u = 0; u < g_.n(); ++u) {
    const auto nb = g_.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (u < nb[i]) ++sizes[slot_colors_[g_.slot_base(u) + i]];
    }
  }
  return sizes;
}

Graph ColoredGraph::color_class(std::uint16_t c) const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g_.n(); ++u) {
    const auto nb = g_.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (u < nb[i] && slot_colors_[g_.slot_base(u) + i] == c) edges.emplace_back(u, nb[i]);
    }
  }
  return Graph::from_edges(g_.n(), edges);
}

ColoredGraph color_edges(Graph g, std::size_t k, ColoringStrategy strategy, std::uint64_t seed) {
  if (k < 1) throw InvalidArgument("need at least one colour");
  std::vector<std::uint16_t> colors(2 * g.m(), 0);
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> color_degree;
  if (strategy == ColoringStrategy::AdversarialBalanced) color_degree.assign(g.n() * k, 0);

  for (Vertex u = 0; u < g.n(); ++u) {
    const auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex v = nb[i];
      if (v < u) continue;
      std::uint16_t c = 0;
      if (strategy == ColoringStrategy::UniformRandom) {
        c = static_cast<std::uint16_t>(rng.below(k));
      } else {
        std::uint64_t best = ~std::uint64_t{0};
        for (std::size_t col = 0; col < k; ++col) {
          const std::uint64_t load = color_degree[u * k + col] + color_degree[v * k + col];
          if (load < best) {
            best = load;
            c = static_cast<std::uint16_t>(col);
          }
        }
        ++color_degree[u * k + c];
        ++color_degree[v * k + c];
      }
      colors[g.slot_base(u) + i] = c;
      colors[g.slot_base(v) + static_cast<std::size_t>(g.slot(v, u))] = c;
    }
  }
  return ColoredGraph(std::move(g), k, std::move(colors));
}

DensestClass densest_color_class(const ColoredGraph& cg) {
  const auto sizes = cg.class_sizes();
  const auto best = std::max_element(sizes.begin(), sizes.end());  // first maximum
  const auto color = static_cast<std::uint16_t>(best - sizes.begin());
  return {cg.color_class(color), color};
}

PeelResult peel_min_degree(const Graph& g0, double threshold) {
  if (!(threshold >= 0.0)) throw InvalidArgument("peeling threshold must be non-negative");
  const std::size_t n = g0.n();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> below;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g0.degree(v);
    if (static_cast<double>(degree[v]) < threshold) below.push(v);
  }

  PeelResult out;
  out.input_average_degree = g0.average_degree();
  std::size_t alive = n;
  std::size_t edges = g0.m();
  while (!below.empty()) {
    const Vertex v = below.top();
    below.pop();
    if (removed[v]) continue;
    const double before = alive == 0 ? 0.0 : 2.0 * static_cast<double>(edges) / static_cast<double>(alive);
    removed[v] = true;
    out.removed_order.push_back(v);
    --alive;
    edges -= degree[v];
    const double after = alive == 0 ? 0.0 : 2.0 * static_cast<double>(edges) / static_cast<double>(alive);
    if (after < before) out.average_monotone = false;
    for (Vertex w : g0.neighbors(v)) {
      if (removed[w]) continue;
      const bool was_above = !(static_cast<double>(degree[w]) < threshold);
      --degree[w];
      if (was_above && static_cast<double>(degree[w]) < threshold) below.push(w);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) out.survivors.push_back(v);
  }
  out.g_prime = g0.induced(out.survivors);
  out.survivor_average_degree = out.g_prime.average_degree();
  return out;
}

double RamseyParams::p() const {
  if (p_override) return *p_override;
  if (n == 0) throw InvalidArgument("n must be positive");
  return c * std::log(static_cast<double>(k)) / static_cast<double>(n);
}

double RamseyParams::peel_threshold() const {
  return c * std::log(static_cast<double>(k)) / 4.0;
}

std::optional<std::size_t> RamseyParams::target_len() const {
  if (k < 2) return std::nullopt;
  const double t = static_cast<double>(n) / (c * c * c * std::log(static_cast<double>(k)));
  return static_cast<std::size_t>(std::floor(t));
}

RamseyReport run_ramsey_pipeline(const RamseyParams& params, std::uint64_t seed) {
  if (params.k < 1) throw InvalidArgument("need k >= 1");
  if (!(params.c > 0.0)) throw InvalidArgument("need c > 0");
  const double p = params.p();
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvalidArgument("edge probability " + std::to_string(p) + " outside (0, 1]");
  }

  RamseyReport report;
  report.seed = seed;
  report.vertex_count = params.vertex_count();
  report.p = p;
  report.threshold = params.peel_threshold();
  report.target_len = params.target_len();

  const auto g = std::make_shared<const Graph>(gen_gnp(report.vertex_count, p, derive_seed(seed, 1)));
  report.m_g = g->m();
  const ColoredGraph cg = color_edges(*g, params.k, params.strategy, derive_seed(seed, 2));
  const DensestClass densest = densest_color_class(cg);
  report.m_densest = densest.graph.m();
  report.densest_color = densest.color;

  PeelResult peeled = peel_min_degree(densest.graph, report.threshold);
  report.survivor_n = peeled.survivors.size();
  report.survivor_min_degree = peeled.g_prime.min_degree();
  report.input_average_degree = peeled.input_average_degree;
  report.survivor_average_degree = peeled.survivor_average_degree;
  report.average_monotone = peeled.average_monotone;
  report.peel_min_degree_ok =
      peeled.survivors.empty() ||
      static_cast<double>(report.survivor_min_degree) >= report.threshold;
  if (peeled.survivors.empty()) {
    report.failure = "no vertex survived peeling";
    return report;
  }

  const GraphPair restricted(g->induced(peeled.survivors), std::move(peeled.g_prime));
  AlgParams alg;
  if (report.target_len && *report.target_len > 0) alg.target_len = report.target_len;
  const RunResult result = run(restricted, alg);
  report.found_len = result.best_len;
  report.target_met = report.target_len && result.best_len >= *report.target_len;

  report.witness.reserve(result.best_path.size());
  for (Vertex v : result.best_path) report.witness.push_back(peeled.survivors[v]);

  report.induced_in_restricted = verify_induced_path(restricted, result.best_path);
  // Full-vertex-set check: G' lifted back onto V(G).
  const GraphPair full(g, std::make_shared<const Graph>(densest.graph));
  report.induced_in_full = verify_induced_path(full, report.witness);
  report.monochromatic = true;
  for (std::size_t i = 0; i + 1 < report.witness.size(); ++i) {
    if (cg.color(report.witness[i], report.witness[i + 1]) != densest.color) report.monochromatic = false;
  }
  report.checks_passed = report.monochromatic && report.induced_in_restricted &&
                         report.induced_in_full && report.peel_min_degree_ok;
  return report;
}

}  // namespace lip
