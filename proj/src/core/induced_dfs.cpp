#include "lip/induced_dfs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lip/error.hpp"
#include "lip/rng.hpp"

namespace lip {
namespace {

constexpr std::uint8_t kT = static_cast<std::uint8_t>(Label::T);
constexpr std::uint8_t kP = static_cast<std::uint8_t>(Label::P);
constexpr std::uint8_t kS1 = static_cast<std::uint8_t>(Label::S1);
constexpr std::uint8_t kS2 = static_cast<std::uint8_t>(Label::S2);

void validate_order(std::span<const Vertex> order, std::size_t n) {
  if (order.size() != n) {
    throw InvalidArgument("order has " + std::to_string(order.size()) + " entries, expected " +
                          std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw InvalidArgument("order is not a permutation of 0..n-1");
    seen[v] = true;
  }
}

}  // namespace

std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::T: return "T";
    case Label::P: return "P";
    case Label::S1: return "S1";
    case Label::S2: return "S2";
  }
  return "?";
}

std::string_view to_string(Action action) noexcept {
  switch (action) {
    case Action::StartNewPath: return "StartNewPath";
    case Action::Push: return "Push";
    case Action::PopToS1: return "PopToS1";
    case Action::PopToS2: return "PopToS2";
  }
  return "?";
}

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::TargetReached: return "TargetReached";
    case StopReason::Exhausted: return "Exhausted";
    case StopReason::CapHit: return "CapHit";
  }
  return "?";
}

std::vector<Vertex> seeded_order(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  SplitMix64 rng(seed);
  rng.shuffle(std::span<Vertex>(order));
  return order;
}

InducedPathSearch::InducedPathSearch(const GraphPair& pair, AlgParams params)
    : g_(pair.g()), gp_(pair.g_prime()), params_(std::move(params)) {
  const std::size_t n = g_.n();
  if (params_.target_len && *params_.target_len == 0) {
    throw InvalidArgument("target length must be at least 1");
  }
  if (!params_.order.empty()) {
    validate_order(params_.order, n);
    // Distribute vertices in σ order so every reordered list is σ-sorted.
    ordered_offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) ordered_offsets_[v + 1] = ordered_offsets_[v] + gp_.degree(v);
    ordered_adjacency_.resize(ordered_offsets_[n]);
    std::vector<std::size_t> fill(ordered_offsets_.begin(), ordered_offsets_.end() - 1);
    for (Vertex u : params_.order) {
      for (Vertex w : gp_.neighbors(u)) ordered_adjacency_[fill[w]++] = u;
    }
    work_ += 2 * ordered_adjacency_.size();
  }
  label_.assign(n, kT);
  anchor_.assign(n, kNoVertex);
  n1_.assign(n, 0);
  n2_.assign(n, 0);
  cursor_.assign(n, 0);
  push_round_.assign(n, 0);
  stack_.reserve(64);
  if (n == 0) finish(StopReason::Exhausted);
}

std::span<const Vertex> InducedPathSearch::candidates(Vertex v) const noexcept {
  if (ordered_offsets_.empty()) return gp_.neighbors(v);
  return {ordered_adjacency_.data() + ordered_offsets_[v],
          ordered_adjacency_.data() + ordered_offsets_[v + 1]};
}

void InducedPathSearch::finish(StopReason reason) noexcept {
  finished_ = true;
  stop_reason_ = reason;
}

bool InducedPathSearch::step() {
  if (finished_) return false;
  ++round_;
  ++work_;
  if (stack_.empty()) {
    // S1 ∪ S2 != V and P = ∅, so some vertex is still in T.
    const auto& order = params_.order;
    auto at = [&](std::size_t i) { return order.empty() ? static_cast<Vertex>(i) : order[i]; };
    while (label_[at(next_start_)] != kT) {
      ++next_start_;
      ++work_;
    }
    push(at(next_start_++), Action::StartNewPath);
  } else {
    const Vertex v = stack_.back();
    const std::size_t deg = gp_.degree(v);
    if (2 * static_cast<std::size_t>(n1_[v]) >= deg) {
      pop(v, Label::S2);
    } else if (2 * static_cast<std::size_t>(n2_[v]) >= deg) {
      pop(v, Label::S1);
    } else {
      const Vertex w = next_candidate(v);
      if (w == kNoVertex) {
        throw InternalError("no extension candidate for vertex " + std::to_string(v) +
                            " at round " + std::to_string(round_) +
                            " although both discard tests failed");
      }
      push(w, Action::Push);
    }
  }

  if (params_.record_trace) trace_.push_back(last_event_);

  if (last_event_.action == Action::StartNewPath || last_event_.action == Action::Push) {
    if (params_.target_len && stack_.size() - 1 >= *params_.target_len) {
      finish(StopReason::TargetReached);
    }
  } else if ((params_.s1_cap && s1_size_ >= *params_.s1_cap) ||
             (params_.s2_cap && s2_size_ >= *params_.s2_cap)) {
    finish(StopReason::CapHit);
  }
  if (!finished_ && s1_size_ + s2_size_ == g_.n()) finish(StopReason::Exhausted);
  return !finished_;
}

void InducedPathSearch::push(Vertex u, Action action) {
  label_[u] = kP;
  push_round_[u] = round_;
  cursor_[u] = 0;

  // Anchors still describe P - u here.
  std::uint32_t inside = 0;
  if (params_.n1_rule == N1Rule::SetDefinition) {
    for (Vertex w : gp_.neighbors(u)) {
      inside += (label_[w] != kP && anchor_[w] != kNoVertex) ? 1 : 0;
    }
    work_ += gp_.degree(u);
  }
  for (Vertex w : g_.neighbors(u)) {
    if (anchor_[w] == kNoVertex) anchor_[w] = u;
  }
  work_ += g_.degree(u);
  if (params_.n1_rule == N1Rule::AnchorCounter) {
    for (Vertex w : gp_.neighbors(u)) {
      inside += (anchor_[w] != kNoVertex && anchor_[w] != u) ? 1 : 0;
    }
    work_ += gp_.degree(u);
  }
  n1_[u] = inside;

  // u enters P ∪ S1 ∪ S2 and never leaves it.
  for (Vertex w : gp_.neighbors(u)) ++n2_[w];
  work_ += gp_.degree(u);

  stack_.push_back(u);
  if (stack_.size() > best_path_.size()) {
    best_path_.resize(stack_.size());
    std::copy(stack_.begin() + static_cast<std::ptrdiff_t>(valid_prefix_), stack_.end(),
              best_path_.begin() + static_cast<std::ptrdiff_t>(valid_prefix_));
    valid_prefix_ = stack_.size();
  }
  last_event_ = {round_, action, u};
}

void InducedPathSearch::pop(Vertex v, Label to) {
  stack_.pop_back();
  valid_prefix_ = std::min(valid_prefix_, stack_.size());
  if (to == Label::S1) {
    label_[v] = kS1;
    ++s1_size_;
  } else {
    label_[v] = kS2;
    ++s2_size_;
  }
  // v was the top, so it was the only path neighbour of anything anchored on it.
  for (Vertex w : g_.neighbors(v)) {
    if (anchor_[w] == v) anchor_[w] = kNoVertex;
  }
  work_ += g_.degree(v);
  last_event_ = {round_, to == Label::S1 ? Action::PopToS1 : Action::PopToS2, v};
}

Vertex InducedPathSearch::next_candidate(Vertex v) {
  // Rejections are permanent while v sits at the top: labels never return to
  // T, and P - v is unchanged on every later visit.
  const auto list = candidates(v);
  while (cursor_[v] < list.size()) {
    const Vertex w = list[cursor_[v]++];
    ++work_;
    if (label_[w] == kT && (anchor_[w] == kNoVertex || anchor_[w] == v)) return w;
  }
  return kNoVertex;
}

RunResult InducedPathSearch::result() const {
  RunResult r;
  r.best_path = best_path_;
  r.best_len = best_path_.empty() ? 0 : best_path_.size() - 1;
  r.rounds = round_;
  r.stop_reason = stop_reason_;
  r.trace = trace_;
  r.s1_size = s1_size_;
  r.s2_size = s2_size_;
  r.work = work_;
  return r;
}

RunResult run(const GraphPair& pair, const AlgParams& params) {
  InducedPathSearch search(pair, params);
  while (search.step()) {
  }
  return search.result();
}

namespace {

class Checker {
 public:
  Checker(const GraphPair& pair, const InducedPathSearch& search)
      : pair_(pair), search_(search), labels_(pair.n(), Label::T), position_(pair.n(), kNone) {}

  void after_round() {
    const std::size_t round = search_.round();
    const std::size_t n = pair_.n();
    const auto path = search_.path();
    const auto& event = search_.last_event();

    if (round > 2 * n) fail("round-bound", "more than 2n rounds");

    // B: only T->P, P->S1, P->S2.
    std::size_t entered_discard = 0;
    std::size_t p_count = 0;
    for (Vertex v = 0; v < n; ++v) {
      const Label now = search_.label(v);
      const Label before = labels_[v];
      if (now != before) {
        const bool ok = (before == Label::T && now == Label::P) ||
                        (before == Label::P && (now == Label::S1 || now == Label::S2));
        if (!ok) {
          fail("B", "vertex " + std::to_string(v) + " moved " + std::string(to_string(before)) +
                        " -> " + std::string(to_string(now)));
        }
        if (now == Label::S1 || now == Label::S2) ++entered_discard;
      }
      labels_[v] = now;
      p_count += now == Label::P ? 1 : 0;
    }
    // D
    if (entered_discard > 1) fail("D", std::to_string(entered_discard) + " vertices entered S1 ∪ S2");

    // Stack holds exactly the P vertices.
    if (p_count != path.size()) fail("stack", "stack size differs from |P|");
    for (Vertex v : path) {
      if (search_.label(v) != Label::P) fail("stack", "stack vertex " + std::to_string(v) + " not in P");
    }

    // A
    if (!path.empty() && !verify_induced_path(pair_, path)) fail("A", "P is not an induced G'-path");

    // E
    if (event.action == Action::PopToS2 && search_.push_round(event.vertex) + 1 != round) {
      fail("E", "vertex " + std::to_string(event.vertex) + " pushed at round " +
                    std::to_string(search_.push_round(event.vertex)) + " moved to S2");
    }

    // Anchors: bottom-most G-neighbour on the path, or none.
    for (std::size_t i = 0; i < path.size(); ++i) position_[path[i]] = i;
    const Graph& g = pair_.g();
    for (Vertex v = 0; v < n; ++v) {
      Vertex expected = kNoVertex;
      std::size_t best = kNone;
      for (Vertex w : g.neighbors(v)) {
        if (position_[w] < best) {
          best = position_[w];
          expected = w;
        }
      }
      if (search_.anchor(v) != expected) {
        fail("anchor", "vertex " + std::to_string(v) + " has anchor " +
                           std::to_string(search_.anchor(v)) + ", expected " + std::to_string(expected));
      }
    }
    for (Vertex v : path) position_[v] = kNone;

    // n2 counts G'-neighbours in P ∪ S1 ∪ S2.
    const Graph& gp = pair_.g_prime();
    for (Vertex v = 0; v < n; ++v) {
      std::uint32_t count = 0;
      for (Vertex w : gp.neighbors(v)) count += search_.label(w) != Label::T ? 1 : 0;
      if (count != search_.n2(v)) fail("n2", "vertex " + std::to_string(v) + " has stale n2");
    }
  }

  void at_end(const RunResult& result) const {
    if (result.stop_reason == StopReason::Exhausted && result.s1_size + result.s2_size != pair_.n()) {
      fail("C", "search exhausted with S1 ∪ S2 != V");
    }
    if (!result.best_path.empty() && !verify_induced_path(pair_, result.best_path)) {
      fail("A", "best path is not an induced G'-path");
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  [[noreturn]] void fail(const char* observation, const std::string& what) const {
    throw InvariantViolation(observation, search_.round(), what);
  }

  const GraphPair& pair_;
  const InducedPathSearch& search_;
  std::vector<Label> labels_;
  std::vector<std::size_t> position_;
};

}  // namespace

RunResult run_with_invariant_checks(const GraphPair& pair, const AlgParams& params) {
  InducedPathSearch search(pair, params);
  Checker checker(pair, search);
  while (!search.finished()) {
    search.step();
    checker.after_round();
  }
  auto result = search.result();
  checker.at_end(result);
  return result;
}

bool verify_induced_path(const GraphPair& pair, std::span<const Vertex> path) {
  if (path.empty()) return false;
  const std::size_t n = pair.n();
  std::vector<bool> seen(n, false);
  for (Vertex v : path) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!pair.g_prime().has_edge(path[i], path[i + 1])) return false;
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 2; j < path.size(); ++j) {
      if (pair.g().has_edge(path[i], path[j])) return false;
    }
  }
  return true;
}

FailureWitness extract_failure_witness(const GraphPair& pair, std::size_t l, std::size_t s1,
                                       std::size_t s2, std::span<const Vertex> order,
                                       std::optional<double> d) {
  const std::size_t n = pair.n();
  if (l == 0 || s1 == 0 || s2 == 0) throw InvalidArgument("l, s1 and s2 must be positive");
  if (s1 + s2 >= n) throw InvalidArgument("need s1 + s2 < n");
  if (l + s1 + s2 > n) throw InvalidArgument("need l + s1 + s2 <= n");
  const double degree = d.value_or(static_cast<double>(pair.d_min()));
  if (degree > static_cast<double>(pair.d_min())) {
    throw InvalidArgument("d exceeds the minimum degree of G'");
  }

  AlgParams params;
  params.order.assign(order.begin(), order.end());
  params.target_len = l;
  params.s1_cap = s1;
  params.s2_cap = s2;
  InducedPathSearch search(pair, params);
  while (search.step()) {
  }

  FailureWitness out;
  out.run = search.result();
  if (out.run.stop_reason == StopReason::TargetReached) {
    out.path_found = true;
    return out;
  }
  if (out.run.stop_reason != StopReason::CapHit) {
    throw InternalError("search exhausted without reaching either cap although s1 + s2 < n");
  }

  auto pad = [&](VertexSet& set, std::size_t size) {
    for (Vertex v = 0; v < n && set.size() < size; ++v) set.insert(v);
  };
  out.x = VertexSet(n);
  out.y = VertexSet(n);
  if (search.s1_size() >= s1) {
    out.condition = 1;
    for (Vertex v = 0; v < n; ++v) {
      const Label lab = search.label(v);
      if (lab == Label::S1) out.x.insert(v);
      if (lab != Label::T) out.y.insert(v);
    }
    pad(out.y, l + s1 + s2);
    out.value = e_between(pair.g_prime(), out.x, out.y);
    out.bound = degree / 4.0 * static_cast<double>(s1);
  } else {
    out.condition = 2;
    for (Vertex v = 0; v < n; ++v) {
      const Label lab = search.label(v);
      if (lab == Label::S1 || lab == Label::P) out.x.insert(v);
      if (lab == Label::S2) out.y.insert(v);
    }
    pad(out.x, l + s1);
    out.value = e_between(pair.g_prime(), gamma_closed(pair.g(), out.x), out.y);
    out.bound = degree / 4.0 * static_cast<double>(s2);
  }
  out.violates = static_cast<double>(out.value) >= out.bound;
  return out;
}

}  // namespace lip
