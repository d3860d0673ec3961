#include "inducedpath.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "lip/edgelist_io.hpp"
#include "lip/error.hpp"
#include "lip/generators.hpp"
#include "lip/induced_dfs.hpp"
#include "lip/oracle.hpp"
#include "lip/ramsey.hpp"
#include "lip/report.hpp"
#include "lip/spectral.hpp"

struct lip_graph {
  std::shared_ptr<const lip::Graph> graph;
};

struct lip_pair {
  lip::GraphPair pair;
};

struct lip_run {
  lip::RunResult result;
  lip::Json report;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

lip_status fail(lip_status status, const std::string& message, std::size_t line = 0) {
  last_error = message;
  last_error_line = line;
  return status;
}

template <typename F>
lip_status guarded(F&& body) {
  last_error.clear();
  last_error_line = 0;
  try {
    body();
    return LIP_OK;
  } catch (const lip::ParseError& e) {
    return fail(LIP_ERR_PARSE, e.what(), e.line());
  } catch (const lip::InvalidArgument& e) {
    return fail(LIP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const lip::GuardExceeded& e) {
    return fail(LIP_ERR_GUARD, e.what());
  } catch (const lip::NotRegular& e) {
    return fail(LIP_ERR_NOT_REGULAR, e.what());
  } catch (const lip::NoConvergence& e) {
    return fail(LIP_ERR_NO_CONVERGENCE, e.what());
  } catch (const lip::GenerationFailure& e) {
    return fail(LIP_ERR_GENERATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LIP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LIP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LIP_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw lip::InvalidArgument(std::string(name) + " must not be null");
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const lip::Json& j) { return copy_string(j.dump()); }

}  // namespace

extern "C" {

const char* lip_last_error(void) { return last_error.c_str(); }

size_t lip_last_error_line(void) { return last_error_line; }

const char* lip_status_name(lip_status status) {
  switch (status) {
    case LIP_OK: return "ok";
    case LIP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LIP_ERR_PARSE: return "parse error";
    case LIP_ERR_GUARD: return "guard exceeded";
    case LIP_ERR_NOT_REGULAR: return "not regular";
    case LIP_ERR_NO_CONVERGENCE: return "no convergence";
    case LIP_ERR_GENERATION: return "generation failure";
    case LIP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lip_string_free(char* s) { std::free(s); }

lip_status lip_graph_parse(const char* text, lip_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new lip_graph{std::make_shared<const lip::Graph>(lip::parse_edge_list(text))};
  });
}

lip_status lip_graph_generate(const char* model, size_t n, size_t d, double p, uint64_t seed,
                              lip_graph** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    const lip::GenSpec spec{lip::parse_model(model), n, d, p, seed};
    *out = new lip_graph{std::make_shared<const lip::Graph>(lip::generate(spec))};
  });
}

lip_status lip_graph_superimpose_cliques(const lip_graph* base, size_t count, size_t size,
                                         uint64_t seed, lip_graph** out, char** cliques_json) {
  return guarded([&] {
    require(base, "base");
    require(out, "out");
    auto instance = lip::gen_clique_superimposed(*base->graph, count, size, seed);
    char* sidecar = cliques_json ? dump(lip::cliques_to_json(instance)) : nullptr;
    *out = new lip_graph{std::make_shared<const lip::Graph>(std::move(instance.graph))};
    if (cliques_json) *cliques_json = sidecar;
  });
}

void lip_graph_free(lip_graph* g) { delete g; }

size_t lip_graph_n(const lip_graph* g) { return g ? g->graph->n() : 0; }

size_t lip_graph_m(const lip_graph* g) { return g ? g->graph->m() : 0; }

lip_status lip_graph_format(const lip_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(lip::format_edge_list(*g->graph));
  });
}

lip_status lip_pair_parse(const char* text, int allow_single, lip_pair** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new lip_pair{lip::parse_pair(text, allow_single != 0)};
  });
}

lip_status lip_pair_create(const lip_graph* g, const lip_graph* gp, lip_pair** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = new lip_pair{lip::GraphPair(g->graph, gp ? gp->graph : g->graph)};
  });
}

void lip_pair_free(lip_pair* pair) { delete pair; }

size_t lip_pair_n(const lip_pair* pair) { return pair ? pair->pair.n() : 0; }

lip_status lip_pair_format(const lip_pair* pair, char** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = copy_string(lip::format_pair(pair->pair));
  });
}

void lip_find_options_init(lip_find_options* options) {
  if (options != nullptr) *options = lip_find_options{};
}

lip_status lip_find(const lip_pair* pair, const lip_find_options* options, lip_run** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    lip_find_options opts{};
    if (options != nullptr) opts = *options;

    lip::AlgParams params;
    std::optional<std::uint64_t> sigma_seed;
    if (opts.use_sigma_seed) {
      sigma_seed = opts.sigma_seed;
      params.order = lip::seeded_order(pair->pair.n(), opts.sigma_seed);
    }
    if (opts.has_target) params.target_len = opts.target_len;
    params.record_trace = opts.record_trace != 0;

    auto run = std::make_unique<lip_run>();
    run->result = opts.checked ? lip::run_with_invariant_checks(pair->pair, params)
                               : lip::run(pair->pair, params);
    run->report = lip::to_json(pair->pair, run->result, sigma_seed, params.target_len,
                               params.record_trace);
    *out = run.release();
  });
}

void lip_run_free(lip_run* run) { delete run; }

size_t lip_run_best_len(const lip_run* run) { return run ? run->result.best_len : 0; }

uint64_t lip_run_work(const lip_run* run) { return run ? run->result.work : 0; }

const uint32_t* lip_run_path(const lip_run* run, size_t* length) {
  if (run == nullptr) {
    if (length) *length = 0;
    return nullptr;
  }
  if (length) *length = run->result.best_path.size();
  return run->result.best_path.data();
}

lip_status lip_run_json(const lip_run* run, char** out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    *out = dump(run->report);
  });
}

lip_status lip_verify_path(const lip_pair* pair, const uint32_t* path, size_t length, int* valid) {
  return guarded([&] {
    require(pair, "pair");
    require(valid, "valid");
    if (length > 0) require(path, "path");
    *valid = lip::verify_induced_path(pair->pair, std::span<const lip::Vertex>(path, length)) ? 1 : 0;
  });
}

lip_status lip_spectral(const lip_graph* g, uint64_t seed, char** json) {
  return guarded([&] {
    require(g, "graph");
    require(json, "json");
    lip::SpectralOptions options;
    options.seed = seed;
    *json = dump(lip::to_json(lip::compute_lambda(*g->graph, options)));
  });
}

lip_status lip_certify_expander(size_t n, size_t d, double lambda, char** json, int* overall) {
  return guarded([&] {
    require(json, "json");
    const auto cert = lip::certify_spectral_expander(n, d, lambda);
    *json = dump(lip::to_json(cert));
    if (overall) *overall = cert.overall ? 1 : 0;
  });
}

lip_status lip_certify_upper_uniform(const lip_graph* g, size_t d, double c, size_t samples,
                                     uint64_t seed, char** json, int* overall) {
  return guarded([&] {
    require(g, "graph");
    require(json, "json");
    const auto cert = lip::certify_upper_uniform(*g->graph, d, c, samples, seed);
    *json = dump(lip::to_json(cert));
    if (overall) *overall = cert.overall ? 1 : 0;
  });
}

lip_status lip_oracle_longest(const lip_graph* g, size_t max_n, char** json) {
  return guarded([&] {
    require(g, "graph");
    require(json, "json");
    *json = dump(lip::to_json(lip::longest_induced_path_exact(*g->graph, max_n)));
  });
}

lip_status lip_oracle_conditions(const lip_pair* pair, size_t l, size_t s1, size_t s2, int exact,
                                 double guard, size_t samples, uint64_t seed, char** json) {
  return guarded([&] {
    require(pair, "pair");
    require(json, "json");
    const auto report =
        exact ? lip::check_sparsity_conditions_exact(pair->pair, l, s1, s2, guard)
              : lip::check_sparsity_conditions_sampled(pair->pair, l, s1, s2, samples, seed);
    *json = dump(lip::to_json(report));
  });
}

lip_status lip_ramsey(size_t n, size_t k, double c, const char* strategy, double p_override,
                      uint64_t seed, char** json) {
  return guarded([&] {
    require(strategy, "strategy");
    require(json, "json");
    lip::RamseyParams params;
    params.n = n;
    params.k = k;
    params.c = c;
    params.strategy = lip::parse_strategy(strategy);
    if (p_override > 0.0) params.p_override = p_override;
    *json = dump(lip::to_json(lip::run_ramsey_pipeline(params, seed)));
  });
}

}  // extern "C"
