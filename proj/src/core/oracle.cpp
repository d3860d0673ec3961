#include "lip/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lip/error.hpp"
#include "lip/rng.hpp"
#include "set_search.hpp"

namespace lip {

double binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(result);
}

namespace {

class PathSearch {
 public:
  explicit PathSearch(const Graph& g)
      : g_(g), on_path_(g.n(), false), blocked_(g.n(), 0) {}

  LongestPathResult solve() {
    const std::size_t n = g_.n();
    if (n == 0) return {};
    best_.path = {0};
    for (Vertex s = 0; s < n && best_.length + 1 < n; ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
    return best_;
  }

 private:
  void extend() {
    const Vertex tip = path_.back();
    // Each path is met from both ends; keep the one starting at the smaller.
    if (path_.size() - 1 > best_.length && tip > start_) {
      best_.length = path_.size() - 1;
      best_.path = path_;
    }
    if (best_.length + 1 == g_.n()) return;
    for (Vertex w : g_.neighbors(tip)) {
      if (on_path_[w] || blocked_[w] != 0) continue;
      for (Vertex x : g_.neighbors(tip)) ++blocked_[x];
      on_path_[w] = true;
      path_.push_back(w);
      extend();
      path_.pop_back();
      on_path_[w] = false;
      for (Vertex x : g_.neighbors(tip)) --blocked_[x];
    }
  }

  const Graph& g_;
  std::vector<bool> on_path_;
  // Number of non-tip path vertices adjacent to each vertex.
  std::vector<std::uint32_t> blocked_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  LongestPathResult best_;
};

/// Evaluates both conditions for a given X, choosing the maximizing Y.
class ConditionEvaluator {
 public:
  ConditionEvaluator(const GraphPair& pair, std::size_t y1_size, std::size_t y2_size)
      : pair_(pair), y1_size_(y1_size), y2_size_(y2_size), counts_(pair.n(), 0),
        order_(pair.n()) {}

  ConditionWitness cond1(std::span<const Vertex> x) {
    std::fill(counts_.begin(), counts_.end(), 0);
    for (Vertex v : x) {
      for (Vertex w : pair_.g_prime().neighbors(v)) ++counts_[w];
    }
    return finish(y1_size_, VertexSet(pair_.n(), x));
  }

  ConditionWitness cond2(std::span<const Vertex> x) {
    const VertexSet xs(pair_.n(), x);
    const VertexSet closed = gamma_closed(pair_.g(), xs);
    std::fill(counts_.begin(), counts_.end(), 0);
    closed.for_each([&](Vertex a) {
      for (Vertex w : pair_.g_prime().neighbors(a)) ++counts_[w];
    });
    return finish(y2_size_, xs);
  }

 private:
  ConditionWitness finish(std::size_t y_size, VertexSet xs) {
    ConditionWitness w;
    w.x = std::move(xs);
    w.value = detail::top_by_count(counts_, y_size, order_, chosen_);
    w.y = VertexSet(pair_.n(), chosen_);
    return w;
  }

  const GraphPair& pair_;
  std::size_t y1_size_;
  std::size_t y2_size_;
  std::vector<std::uint32_t> counts_;
  std::vector<Vertex> order_;
  std::vector<Vertex> chosen_;
};

struct Sizes {
  std::size_t x1, y1, x2, y2;
};

Sizes validate(const GraphPair& pair, std::size_t l, std::size_t s1, std::size_t s2) {
  const std::size_t n = pair.n();
  if (l == 0 || s1 == 0 || s2 == 0) throw InvalidArgument("l, s1 and s2 must be positive integers");
  if (s1 + s2 >= n) throw InvalidArgument("need s1 + s2 < n");
  const Sizes sizes{s1, l + s1 + s2, l + s1, s2};
  if (sizes.y1 > n || sizes.x2 > n) {
    throw InvalidArgument("set sizes l+s1+s2 = " + std::to_string(sizes.y1) + " exceed n = " +
                          std::to_string(n));
  }
  return sizes;
}

void prepare(ConditionReport& report, const GraphPair& pair, std::size_t l, std::size_t s1,
             std::size_t s2, std::optional<double> d) {
  report.l = l;
  report.s1 = s1;
  report.s2 = s2;
  report.d = d.value_or(static_cast<double>(pair.d_min()));
  report.bound1 = report.d / 4.0 * static_cast<double>(s1);
  report.bound2 = report.d / 4.0 * static_cast<double>(s2);
  report.worst1 = {VertexSet(pair.n()), VertexSet(pair.n()), 0};
  report.worst2 = {VertexSet(pair.n()), VertexSet(pair.n()), 0};
}

/// Calls f on every k-subset of 0..n-1 in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  while (true) {
    f(std::span<const Vertex>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void keep_worst(ConditionWitness& worst, ConditionWitness candidate, bool& first) {
  if (first || candidate.value > worst.value) {
    worst = std::move(candidate);
    first = false;
  }
}

}  // namespace

LongestPathResult longest_induced_path_exact(const Graph& g, std::size_t max_n) {
  if (g.n() > max_n) {
    throw GuardExceeded("exact longest induced path limited to n <= " + std::to_string(max_n) +
                        " (got " + std::to_string(g.n()) + ")");
  }
  return PathSearch(g).solve();
}

ConditionReport check_sparsity_conditions_exact(const GraphPair& pair, std::size_t l,
                                                std::size_t s1, std::size_t s2, double guard,
                                                std::optional<double> d) {
  const Sizes sizes = validate(pair, l, s1, s2);
  const std::size_t n = pair.n();
  const double work = std::max(binomial(n, sizes.x1), binomial(n, sizes.x2));
  if (work > guard) {
    throw GuardExceeded("exact check needs " + std::to_string(work) +
                        " subset enumerations (guard " + std::to_string(guard) +
                        "); use the sampled check");
  }
  ConditionReport report;
  prepare(report, pair, l, s1, s2, d);
  report.exhaustive = true;

  ConditionEvaluator eval(pair, sizes.y1, sizes.y2);
  bool first = true;
  for_each_subset(n, sizes.x1, [&](std::span<const Vertex> x) {
    keep_worst(report.worst1, eval.cond1(x), first);
    ++report.sets_checked;
  });
  first = true;
  for_each_subset(n, sizes.x2, [&](std::span<const Vertex> x) {
    keep_worst(report.worst2, eval.cond2(x), first);
    ++report.sets_checked;
  });
  report.cond1_holds = static_cast<double>(report.worst1.value) < report.bound1;
  report.cond2_holds = static_cast<double>(report.worst2.value) < report.bound2;
  return report;
}

ConditionReport check_sparsity_conditions_sampled(const GraphPair& pair, std::size_t l,
                                                  std::size_t s1, std::size_t s2,
                                                  std::size_t samples, std::uint64_t seed,
                                                  std::optional<double> d) {
  const Sizes sizes = validate(pair, l, s1, s2);
  const std::size_t n = pair.n();
  ConditionReport report;
  prepare(report, pair, l, s1, s2, d);
  report.exhaustive = false;
  if (samples == 0) {
    report.cond1_holds = true;
    report.cond2_holds = true;
    return report;
  }

  ConditionEvaluator eval(pair, sizes.y1, sizes.y2);
  SplitMix64 rng(seed);
  auto sweep = [&](std::size_t k, const Graph& greedy_graph, auto&& evaluate, ConditionWitness& worst) {
    const auto greedy = detail::greedy_sets(greedy_graph, k);
    bool first = true;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto x = i < greedy.size() ? greedy[i] : detail::random_subset(n, k, rng);
      keep_worst(worst, evaluate(x), first);
      ++report.sets_checked;
    }
  };
  sweep(sizes.x1, pair.g_prime(), [&](const std::vector<Vertex>& x) { return eval.cond1(x); },
        report.worst1);
  sweep(sizes.x2, pair.g(), [&](const std::vector<Vertex>& x) { return eval.cond2(x); },
        report.worst2);
  report.cond1_holds = static_cast<double>(report.worst1.value) < report.bound1;
  report.cond2_holds = static_cast<double>(report.worst2.value) < report.bound2;
  return report;
}

}  // namespace lip
