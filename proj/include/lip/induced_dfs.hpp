#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lip/graph.hpp"

namespace lip {

// Modified depth-first search for a path in G' that is induced in G.
//
// The vertex set is partitioned into T (untouched), P (the current path, kept
// as a stack), S1 and S2 (discarded). Each round performs one action on the
// vertex v at the top of the stack:
//
//   - P empty: start a new path with the next T vertex in the order σ.
//   - at least deg'(v)/2 of v's G'-neighbours lie in N_G(P - v): v -> S2.
//   - else at least deg'(v)/2 of them lie in P ∪ S1 ∪ S2:        v -> S1.
//   - else push the σ-least G'-neighbour of v that is in T and has no
//     G-neighbour in P - v.
//
// The search stops when S1 ∪ S2 = V, when the path reaches the target length,
// or when a diagnostic cap on |S1| or |S2| is reached. All per-round work is
// amortized against adjacency scans, so a full run costs O(n + e(G) + e(G')).

enum class Label : std::uint8_t { T, P, S1, S2 };

enum class Action : std::uint8_t { StartNewPath, Push, PopToS1, PopToS2 };

enum class StopReason : std::uint8_t { TargetReached, Exhausted, CapHit };

/// How the "neighbours inside N_G(P - v)" count is taken when v is pushed.
enum class N1Rule : std::uint8_t {
  /// Exact set N_G(P - v); v's path predecessor is not counted.
  SetDefinition,
  /// Count G'-neighbours whose anchor is neither none nor v. This can also
  /// count the predecessor. Kept for comparison only.
  AnchorCounter,
};

std::string_view to_string(Label label) noexcept;
std::string_view to_string(Action action) noexcept;
std::string_view to_string(StopReason reason) noexcept;

struct AlgParams {
  /// σ, a permutation of 0..n-1. Empty means the identity.
  std::vector<Vertex> order;
  /// Stop as soon as the path has this many edges.
  std::optional<std::size_t> target_len;
  std::optional<std::size_t> s1_cap;
  std::optional<std::size_t> s2_cap;
  bool record_trace = false;
  N1Rule n1_rule = N1Rule::SetDefinition;
};

/// Seeded uniformly random permutation of 0..n-1.
std::vector<Vertex> seeded_order(std::size_t n, std::uint64_t seed);

struct RoundEvent {
  std::size_t round = 0;
  Action action = Action::StartNewPath;
  Vertex vertex = kNoVertex;

  friend bool operator==(const RoundEvent&, const RoundEvent&) = default;
};

struct RunResult {
  std::vector<Vertex> best_path;
  /// Edge count of best_path (0 when it holds at most one vertex).
  std::size_t best_len = 0;
  std::size_t rounds = 0;
  StopReason stop_reason = StopReason::Exhausted;
  std::vector<RoundEvent> trace;
  std::size_t s1_size = 0;
  std::size_t s2_size = 0;
  /// Adjacency entries scanned plus rounds and order-cursor steps.
  std::uint64_t work = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Round-by-round driver. `run` and the checked variant are thin loops over
/// `step`; the state accessors exist for invariant checking and for turning
/// a failed search into a witness against the sparsity conditions.
class InducedPathSearch {
 public:
  InducedPathSearch(const GraphPair& pair, AlgParams params);

  /// Executes one round. Returns false once the search has stopped.
  bool step();
  bool finished() const noexcept { return finished_; }

  std::size_t round() const noexcept { return round_; }
  const RoundEvent& last_event() const noexcept { return last_event_; }

  std::span<const Vertex> path() const noexcept { return stack_; }
  Label label(Vertex v) const noexcept { return static_cast<Label>(label_[v]); }
  Vertex anchor(Vertex v) const noexcept { return anchor_[v]; }
  std::uint32_t n1(Vertex v) const noexcept { return n1_[v]; }
  std::uint32_t n2(Vertex v) const noexcept { return n2_[v]; }
  /// Round in which v was last pushed (0 if never).
  std::size_t push_round(Vertex v) const noexcept { return push_round_[v]; }
  std::size_t s1_size() const noexcept { return s1_size_; }
  std::size_t s2_size() const noexcept { return s2_size_; }
  std::uint64_t work() const noexcept { return work_; }

  /// Result so far; complete once finished().
  RunResult result() const;

 private:
  void push(Vertex u, Action action);
  void pop(Vertex v, Label to);
  Vertex next_candidate(Vertex v);
  std::span<const Vertex> candidates(Vertex v) const noexcept;
  void finish(StopReason reason) noexcept;

  const Graph& g_;
  const Graph& gp_;
  AlgParams params_;

  std::vector<std::uint8_t> label_;
  std::vector<Vertex> anchor_;
  std::vector<std::uint32_t> n1_;
  std::vector<std::uint32_t> n2_;
  std::vector<std::uint32_t> cursor_;
  std::vector<std::size_t> push_round_;
  // G' adjacency reordered by σ-rank; empty when σ is the identity.
  std::vector<std::size_t> ordered_offsets_;
  std::vector<Vertex> ordered_adjacency_;

  std::vector<Vertex> stack_;
  std::size_t next_start_ = 0;
  std::size_t s1_size_ = 0;
  std::size_t s2_size_ = 0;
  std::size_t round_ = 0;
  std::uint64_t work_ = 0;
  bool finished_ = false;
  StopReason stop_reason_ = StopReason::Exhausted;
  RoundEvent last_event_;
  std::vector<RoundEvent> trace_;

  // best_path_[0, valid_prefix_) always equals stack_[0, valid_prefix_).
  std::vector<Vertex> best_path_;
  std::size_t valid_prefix_ = 0;
};

RunResult run(const GraphPair& pair, const AlgParams& params = {});

/// Same result as `run`, but re-checks the algorithm's observations after
/// every round and throws InvariantViolation on the first failure:
/// A (P is a G'-path induced in G), B (labels only move T->P->S1/S2),
/// C (S1 ∪ S2 = V on exhaustion), D (at most one vertex enters S1 ∪ S2 per
/// round), E (a vertex moved to S2 was pushed in the previous round), plus
/// anchor/n2/stack bookkeeping and the 2n round bound. O(n + m) per round.
RunResult run_with_invariant_checks(const GraphPair& pair, const AlgParams& params = {});

/// Distinct vertices, consecutive ones adjacent in G', non-consecutive ones
/// non-adjacent in G. The empty sequence is rejected.
bool verify_induced_path(const GraphPair& pair, std::span<const Vertex> path);

/// Outcome of running the search against parameters (ℓ, s1, s2).
///
/// If the search does not reach a path with ℓ edges it stops when |S1| = s1
/// or |S2| = s2, and the final partition gives explicit sets of exactly the
/// sizes quantified in the sparsity conditions:
///   condition 1: X = S1, Y ⊇ P ∪ S1 ∪ S2 with |Y| = ℓ+s1+s2, and
///                e_{G'}(X, Y) ≥ s1·d/2;
///   condition 2: X ⊇ P ∪ S1 with |X| = ℓ+s1, Y = S2, and
///                e_{G'}(Γ_G[X], Y) ≥ s2·d/2.
/// Either contradicts the corresponding "< d/4·s" bound.
struct FailureWitness {
  bool path_found = false;
  RunResult run;
  int condition = 0;  // 1 or 2 when !path_found
  VertexSet x;
  VertexSet y;
  std::uint64_t value = 0;
  double bound = 0.0;  // d/4 · s_condition
  bool violates = false;
};

/// Requires positive ℓ, s1, s2 with s1+s2 < n and ℓ+s1+s2 <= n. `d` defaults
/// to the minimum degree of G'.
FailureWitness extract_failure_witness(const GraphPair& pair, std::size_t l, std::size_t s1,
                                       std::size_t s2, std::span<const Vertex> order = {},
                                       std::optional<double> d = std::nullopt);

}  // namespace lip
