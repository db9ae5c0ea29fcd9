// Copyright 2026 The graphcumulants Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to graphcumulants. Handles are opaque; every function that can
 * fail returns a gc_status and leaves a message for gc_last_error(). Strings
 * returned through char** belong to the caller and are released with
 * gc_string_free(). Results are JSON documents with rationals written as
 * {"numer": "...", "denom": "..."}. */

#ifndef GRAPHCUMULANTS_GC_API_H_
#define GRAPHCUMULANTS_GC_API_H_

#include <stdint.h>

#if defined(_WIN32)
#define GC_API __declspec(dllexport)
#else
#define GC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
  GC_OK = 0,
  GC_ERROR_USAGE = 1,
  GC_ERROR_DATA = 2,
  GC_ERROR_INFEASIBLE = 3,
  GC_ERROR_SIZE_CAP = 4,
  GC_ERROR_INTERNAL = 5
} gc_status;

typedef struct gc_graph gc_graph;

typedef struct gc_graph_options {
  int directed;
  int weighted;
  int bipartite;
  int64_t nodes; /* <= 0: one more than the largest node id */
} gc_graph_options;

GC_API const char* gc_version(void);
/* Message of the last failure on the calling thread. */
GC_API const char* gc_last_error(void);
GC_API void gc_string_free(char* s);

/* attribute_text may be NULL. */
GC_API gc_status gc_graph_parse(const char* edge_text, const char* attribute_text,
                                const gc_graph_options* options, gc_graph** out);
GC_API void gc_graph_free(gc_graph* g);
GC_API int64_t gc_graph_nodes(const gc_graph* g);
GC_API int64_t gc_graph_edges(const gc_graph* g);
/* attribute_text receives NULL for graphs without attributes. */
GC_API gc_status gc_graph_write(const gc_graph* g, char** edge_text,
                                char** attribute_text);

GC_API gc_status gc_count(const gc_graph* g, int order, int threads, char** json);
GC_API gc_status gc_moments(const gc_graph* g, int order, int threads, char** json);
/* root_exponent <= 0 reports signed r-th roots. */
GC_API gc_status gc_cumulants(const gc_graph* g, int order, int threads,
                              int scaled, double root_exponent, char** json);
/* eta: rational text such as "1/11" or "0.5"; NULL skips the model targets. */
GC_API gc_status gc_unbiased(const gc_graph* g, int order, int threads,
                             const char* eta, char** json);

typedef struct gc_ztest_options {
  const char* subgraph; /* alias or serialized id */
  int replicates;       /* jackknife replicates for r >= 2 */
  double delete_fraction;
  uint64_t seed;
  int threads;
} gc_ztest_options;
GC_API gc_status gc_ztest(const gc_graph* g, const gc_ztest_options* options,
                          char** json);

/* node < 0 reports every node. */
GC_API gc_status gc_local_node(const gc_graph* g, int64_t node, int order,
                               int threads, char** json);
/* u < 0 reports every edge. */
GC_API gc_status gc_local_edge(const gc_graph* g, int64_t u, int64_t v, int order,
                               int threads, char** json);

typedef struct gc_ergm_options {
  int order;              /* default statistic set: all simple classes up to order */
  const char* statistics; /* comma-separated aliases; overrides order when set */
  const char* eta;        /* NULL or "0": observed moments */
  int allow_large;        /* permits 10-node enumeration */
  int threads;
} gc_ergm_options;
GC_API gc_status gc_ergm_fit(const gc_graph* g, const gc_ergm_options* options,
                             char** json);
/* statistic NULL: every fitted statistic. */
GC_API gc_status gc_ergm_dist(const gc_graph* g, const gc_ergm_options* options,
                              const char* statistic, char** json);

GC_API gc_status gc_editgraph(int nodes, int span_order, char** json);

GC_API gc_status gc_generate_er(int64_t n, double p, uint64_t seed, int threads,
                                gc_graph** out);
GC_API gc_status gc_generate_ssbm(int64_t n, double a, double b, uint64_t seed,
                                  int threads, gc_graph** out);
GC_API gc_status gc_ssbm_from_chart(int64_t n, double assortativity,
                                    double mean_degree, double* a, double* b);
GC_API gc_status gc_generate_bipartite_geometric(int64_t n, double f,
                                                 double mean_degree, uint64_t seed,
                                                 gc_graph** out);
/* mode: "attributes", "orientations" or "weights". */
GC_API gc_status gc_shuffle(const gc_graph* g, const char* mode, uint64_t seed,
                            gc_graph** out);

GC_API gc_status gc_sum_demo(int order, char** json);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHCUMULANTS_GC_API_H_ */
