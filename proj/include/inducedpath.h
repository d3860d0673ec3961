/* C interface to the induced-path library. */
#ifndef INDUCEDPATH_H
#define INDUCEDPATH_H

#include <stddef.h>
#include <stdint.h>

#if defined(LIP_BUILDING_LIBRARY)
#define LIP_API __attribute__((visibility("default")))
#else
#define LIP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lip_status {
  LIP_OK = 0,
  LIP_ERR_INVALID_ARGUMENT = 1,
  LIP_ERR_PARSE = 2,
  LIP_ERR_GUARD = 3,
  LIP_ERR_NOT_REGULAR = 4,
  LIP_ERR_NO_CONVERGENCE = 5,
  LIP_ERR_GENERATION = 6,
  LIP_ERR_INTERNAL = 7
} lip_status;

typedef struct lip_graph lip_graph;
typedef struct lip_pair lip_pair;
typedef struct lip_run lip_run;

/* Message of the last failed call on this thread ("" if none). */
LIP_API const char* lip_last_error(void);
/* Input line of the last LIP_ERR_PARSE on this thread, 0 otherwise. */
LIP_API size_t lip_last_error_line(void);
LIP_API const char* lip_status_name(lip_status status);

/* Every char* handed out by the library is released with this. */
LIP_API void lip_string_free(char* s);

/* Graphs */
LIP_API lip_status lip_graph_parse(const char* text, lip_graph** out);
/* model: random-regular, gnp, cycle, complete, path, petersen. */
LIP_API lip_status lip_graph_generate(const char* model, size_t n, size_t d, double p, uint64_t seed,
                                      lip_graph** out);
/* Adds `count` disjoint cliques of `size` vertices; cliques_json receives
   the partition sidecar and may be NULL. */
LIP_API lip_status lip_graph_superimpose_cliques(const lip_graph* base, size_t count, size_t size,
                                                 uint64_t seed, lip_graph** out,
                                                 char** cliques_json);
LIP_API void lip_graph_free(lip_graph* g);
LIP_API size_t lip_graph_n(const lip_graph* g);
LIP_API size_t lip_graph_m(const lip_graph* g);
LIP_API lip_status lip_graph_format(const lip_graph* g, char** out);

/* Pairs (G, G'). With allow_single, text without a "---" line gives G' = G. */
LIP_API lip_status lip_pair_parse(const char* text, int allow_single, lip_pair** out);
/* gp may be NULL for G' = G. */
LIP_API lip_status lip_pair_create(const lip_graph* g, const lip_graph* gp, lip_pair** out);
LIP_API void lip_pair_free(lip_pair* pair);
LIP_API size_t lip_pair_n(const lip_pair* pair);
LIP_API lip_status lip_pair_format(const lip_pair* pair, char** out);

/* Search */
typedef struct lip_find_options {
  int use_sigma_seed; /* 0: identity order */
  uint64_t sigma_seed;
  int has_target;
  size_t target_len;
  int checked; /* re-verify the invariants every round */
  int record_trace;
} lip_find_options;

LIP_API void lip_find_options_init(lip_find_options* options);
LIP_API lip_status lip_find(const lip_pair* pair, const lip_find_options* options, lip_run** out);
LIP_API void lip_run_free(lip_run* run);
LIP_API size_t lip_run_best_len(const lip_run* run);
LIP_API uint64_t lip_run_work(const lip_run* run);
/* Borrowed view of the best path, valid until lip_run_free. */
LIP_API const uint32_t* lip_run_path(const lip_run* run, size_t* length);
LIP_API lip_status lip_run_json(const lip_run* run, char** out);

LIP_API lip_status lip_verify_path(const lip_pair* pair, const uint32_t* path, size_t length,
                                   int* valid);

/* Spectral and certificates (JSON out) */
/* seed: Lanczos start vector (large graphs only). */
LIP_API lip_status lip_spectral(const lip_graph* g, uint64_t seed, char** json);
LIP_API lip_status lip_certify_expander(size_t n, size_t d, double lambda, char** json,
                                        int* overall);
LIP_API lip_status lip_certify_upper_uniform(const lip_graph* g, size_t d, double c, size_t samples,
                                             uint64_t seed, char** json, int* overall);

/* Oracles (JSON out) */
LIP_API lip_status lip_oracle_longest(const lip_graph* g, size_t max_n, char** json);
/* exact != 0: exhaustive with the given guard; otherwise `samples` sampled sets. */
LIP_API lip_status lip_oracle_conditions(const lip_pair* pair, size_t l, size_t s1, size_t s2,
                                         int exact, double guard, size_t samples, uint64_t seed,
                                         char** json);

/* Ramsey pipeline. strategy: "uniform" or "balanced"; p_override <= 0 means
   p = c ln(k) / n. */
LIP_API lip_status lip_ramsey(size_t n, size_t k, double c, const char* strategy, double p_override,
                              uint64_t seed, char** json);

#ifdef __cplusplus
}
#endif

#endif
