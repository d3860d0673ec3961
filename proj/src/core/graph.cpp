#include "lip/graph.hpp"

#include <algorithm>
#include <string>

#include "lip/error.hpp"

namespace lip {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n >= static_cast<std::size_t>(kNoVertex)) {
    throw InvalidArgument("vertex count " + std::to_string(n) + " too large");
  }
  std::vector<std::size_t> degree(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw InvalidArgument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    ++degree[u];
    ++degree[v];
  }

  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) start[v + 1] = start[v] + degree[v];
  std::vector<Vertex> raw(start[n]);
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (const auto& [u, v] : edges) {
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(raw.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(start[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(start[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.adjacency_.insert(g.adjacency_.end(), first, last);
    g.offsets_[v + 1] = g.adjacency_.size();
  }
  g.adjacency_.shrink_to_fit();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::ptrdiff_t Graph::slot(Vertex u, Vertex v) const noexcept {
  const auto nb = neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return it - nb.begin();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = n() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n(); ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::is_regular() const noexcept { return min_degree() == max_degree(); }

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> index(n(), kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n() || index[keep[i]] != kNoVertex) {
      throw InvalidArgument("induced: vertex list must be distinct and in range");
    }
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : neighbors(keep[i])) {
      const Vertex j = index[w];
      if (j != kNoVertex && i < j) kept.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return from_edges(keep.size(), kept);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  s.count_ = universe;
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside set universe " +
                          std::to_string(universe_));
  }
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (words_[v >> 6] & bit) return false;
  words_[v >> 6] |= bit;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (v >= universe_) return false;
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(words_[v >> 6] & bit)) return false;
  words_[v >> 6] &= ~bit;
  --count_;
  return true;
}

void VertexSet::clear() noexcept {
  std::fill(words_.begin(), words_.end(), 0);
  count_ = 0;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::recount() noexcept {
  count_ = 0;
  for (auto w : words_) count_ += static_cast<std::size_t>(__builtin_popcountll(w));
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw InvalidArgument("vertex set universes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.universe_ != universe_) throw InvalidArgument("vertex set universes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (other.universe_ != universe_) throw InvalidArgument("vertex set universes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

GraphPair::GraphPair(std::shared_ptr<const Graph> g, std::shared_ptr<const Graph> g_prime)
    : g_(std::move(g)), g_prime_(std::move(g_prime)) {
  if (!g_ || !g_prime_) throw InvalidArgument("graph pair: null graph");
  if (g_->n() != g_prime_->n()) {
    throw InvalidArgument("graph pair: G has " + std::to_string(g_->n()) + " vertices, G' has " +
                          std::to_string(g_prime_->n()));
  }
  if (g_ != g_prime_) {
    for (Vertex u = 0; u < g_prime_->n(); ++u) {
      for (Vertex v : g_prime_->neighbors(u)) {
        if (u < v && !g_->has_edge(u, v)) {
          throw InvalidArgument("graph pair: G' edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not an edge of G");
        }
      }
    }
  }
  d_min_ = g_prime_->min_degree();
}

GraphPair::GraphPair(std::shared_ptr<const Graph> g) : GraphPair(g, g) {}

GraphPair::GraphPair(Graph g) : GraphPair(std::make_shared<const Graph>(std::move(g))) {}

GraphPair::GraphPair(Graph g, Graph g_prime)
    : GraphPair(std::make_shared<const Graph>(std::move(g)),
                std::make_shared<const Graph>(std::move(g_prime))) {}

VertexSet gamma(const Graph& g, const VertexSet& x) {
  VertexSet out(g.n());
  x.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) out.insert(w);
  });
  return out;
}

VertexSet gamma_closed(const Graph& g, const VertexSet& x) { return gamma(g, x) | x; }

VertexSet external_nbhd(const Graph& g, const VertexSet& x) { return gamma(g, x) - x; }

std::uint64_t e_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::uint64_t count = 0;
  x.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) count += y.contains(w) ? 1 : 0;
  });
  return count;
}

}  // namespace lip
