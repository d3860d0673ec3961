#include "lip/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lip/error.hpp"
#include "lip/rng.hpp"

namespace lip {

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::RandomRegular: return "random-regular";
    case Model::Gnp: return "gnp";
    case Model::Cycle: return "cycle";
    case Model::Complete: return "complete";
    case Model::Path: return "path";
    case Model::Petersen: return "petersen";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  for (Model m : {Model::RandomRegular, Model::Gnp, Model::Cycle, Model::Complete, Model::Path,
                  Model::Petersen}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidArgument("unknown model \"" + std::string(name) + "\"");
}

Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::RandomRegular: return gen_random_regular(spec.n, spec.d, spec.seed);
    case Model::Gnp: return gen_gnp(spec.n, spec.p, spec.seed);
    default: return gen_named(spec.model, spec.n);
  }
}

namespace {

constexpr int kMaxRestarts = 1000;

bool contains(const std::vector<Vertex>& list, Vertex v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

}  // namespace

Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 != 0) throw InvalidArgument("random regular graph needs n*d even");
  if (d >= n && !(n == 0 && d == 0)) throw InvalidArgument("random regular graph needs d < n");
  SplitMix64 rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Vertex> stubs;

  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    for (auto& list : adj) {
      list.clear();
      list.reserve(d);
    }
    stubs.clear();
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);

    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      std::size_t failures = 0;
      while (true) {
        const auto i = static_cast<std::size_t>(rng.below(stubs.size()));
        const auto j = static_cast<std::size_t>(rng.below(stubs.size()));
        const Vertex u = stubs[i];
        const Vertex v = stubs[j];
        if (u != v && !contains(adj[u], v)) {
          adj[u].push_back(v);
          adj[v].push_back(u);
          // Remove the higher index first so the lower one stays valid.
          for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
            stubs[k] = stubs.back();
            stubs.pop_back();
          }
          break;
        }
        if (++failures > 64 + 4 * stubs.size()) {
          // Restart only if no valid pair is left among the remaining stubs.
          std::vector<Vertex> open(stubs.begin(), stubs.end());
          std::sort(open.begin(), open.end());
          open.erase(std::unique(open.begin(), open.end()), open.end());
          bool any = false;
          for (std::size_t a = 0; a < open.size() && !any; ++a) {
            for (std::size_t b = a + 1; b < open.size() && !any; ++b) {
              any = !contains(adj[open[a]], open[b]);
            }
          }
          if (!any) {
            stuck = true;
            break;
          }
          failures = 0;
        }
      }
    }
    if (stuck) continue;

    std::vector<Edge> edges;
    edges.reserve(n * d / 2);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : adj[u]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    return Graph::from_edges(n, edges);
  }
  throw GenerationFailure("random regular graph: no simple pairing after " +
                          std::to_string(kMaxRestarts) + " restarts");
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  if (p > 0.0 && n > 1) {
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    edges.reserve(static_cast<std::size_t>(pairs * p * 1.1) + 16);
    if (p == 1.0) {
      for (Vertex v = 1; v < n; ++v) {
        for (Vertex w = 0; w < v; ++w) edges.emplace_back(w, v);
      }
    } else {
      // Skip over runs of absent pairs (w, v), w < v, in row-major order.
      SplitMix64 rng(seed);
      const double log_q = std::log1p(-p);
      std::int64_t v = 1;
      std::int64_t w = -1;
      const auto nn = static_cast<std::int64_t>(n);
      while (v < nn) {
        const double r = rng.uniform();
        w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
        while (w >= v && v < nn) {
          w -= v;
          ++v;
        }
        if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_named(Model model, std::size_t n) {
  std::vector<Edge> edges;
  switch (model) {
    case Model::Cycle:
      if (n < 3) throw InvalidArgument("cycle needs n >= 3");
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
      return Graph::from_edges(n, edges);
    case Model::Path:
      if (n < 1) throw InvalidArgument("path needs n >= 1");
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph::from_edges(n, edges);
    case Model::Complete:
      if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) edges.emplace_back(v, w);
      }
      return Graph::from_edges(n, edges);
    case Model::Petersen:
      // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
      for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
      }
      return Graph::from_edges(10, edges);
    default:
      throw InvalidArgument("model " + std::string(to_string(model)) + " needs parameters and a seed");
  }
}

CliqueInstance gen_clique_superimposed(const Graph& base, std::size_t count, std::size_t size,
                                       std::uint64_t seed) {
  const std::size_t n = base.n();
  if (count * size > n) {
    throw InvalidArgument(std::to_string(count) + " disjoint cliques of size " + std::to_string(size) +
                          " do not fit in " + std::to_string(n) + " vertices");
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  SplitMix64 rng(seed);
  rng.shuffle(std::span<Vertex>(perm));

  CliqueInstance out;
  std::vector<Edge> edges = base.edges();
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> clique(perm.begin() + static_cast<std::ptrdiff_t>(c * size),
                               perm.begin() + static_cast<std::ptrdiff_t>((c + 1) * size));
    std::sort(clique.begin(), clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    }
    out.cliques.push_back(std::move(clique));
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

CliqueInstance gen_clique_superimposed(const GenSpec& base, std::size_t count, std::size_t size,
                                       std::uint64_t seed) {
  return gen_clique_superimposed(generate(base), count, size, seed);
}

}  // namespace lip
