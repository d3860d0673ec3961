#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace lip {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Immutable simple undirected graph on vertices 0..n-1 in CSR form.
///
/// Adjacency lists are strictly increasing, symmetric and loop-free. Build one
/// with `Graph::from_edges`; repeated pairs (in either orientation) collapse
/// to a single edge, self-loops and out-of-range endpoints throw
/// `InvalidArgument` naming the offending pair.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const noexcept { return adjacency_.size() / 2; }

  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// O(log deg(u)).
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Position of v inside neighbors(u), or -1. Used to key per-slot data.
  std::ptrdiff_t slot(Vertex u, Vertex v) const noexcept;
  std::size_t slot_base(Vertex u) const noexcept { return offsets_[u]; }

  /// Canonical edge list: u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  bool is_regular() const noexcept;
  double average_degree() const noexcept {
    return n() == 0 ? 0.0 : 2.0 * static_cast<double>(m()) / static_cast<double>(n());
  }

  /// Subgraph induced on `keep` (any order, distinct). Vertex i of the result
  /// is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Dense membership bitmap over 0..universe-1 with a maintained cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : words_((universe + 63) / 64, 0), universe_(universe) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }

  /// Returns true when v was not already present.
  bool insert(Vertex v);
  bool erase(Vertex v);
  void clear() noexcept;

  std::vector<Vertex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void recount() noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
};

/// A supergraph G and a subgraph G' on the same vertex set (G' ⊆ G).
///
/// Both graphs are shared immutably, so a pair with G' = G holds one graph.
class GraphPair {
 public:
  GraphPair(std::shared_ptr<const Graph> g, std::shared_ptr<const Graph> g_prime);

  /// G' = G.
  explicit GraphPair(std::shared_ptr<const Graph> g);
  explicit GraphPair(Graph g);
  GraphPair(Graph g, Graph g_prime);

  const Graph& g() const noexcept { return *g_; }
  const Graph& g_prime() const noexcept { return *g_prime_; }
  std::size_t n() const noexcept { return g_->n(); }
  /// Minimum degree of G' (0 for the empty vertex set).
  std::size_t d_min() const noexcept { return d_min_; }
  bool same_graphs() const noexcept { return g_ == g_prime_; }

  const std::shared_ptr<const Graph>& g_ptr() const noexcept { return g_; }
  const std::shared_ptr<const Graph>& g_prime_ptr() const noexcept { return g_prime_; }

 private:
  std::shared_ptr<const Graph> g_;
  std::shared_ptr<const Graph> g_prime_;
  std::size_t d_min_ = 0;
};

/// Γ(X): vertices with at least one neighbour in X (may intersect X).
VertexSet gamma(const Graph& g, const VertexSet& x);

/// Γ[X] = X ∪ Γ(X).
VertexSet gamma_closed(const Graph& g, const VertexSet& x);

/// N(X) = Γ(X) \ X.
VertexSet external_nbhd(const Graph& g, const VertexSet& x);

/// e(X,Y) = #{(x,y) : x∈X, y∈Y, xy∈E}. Ordered pairs: an edge with both
/// endpoints in X ∩ Y is counted twice.
std::uint64_t e_between(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace lip
