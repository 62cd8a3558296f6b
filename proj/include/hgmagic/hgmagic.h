/* Copyright 2026 The hgmagic Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HGMAGIC_H_
#define HGMAGIC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HGM_API __declspec(dllexport)
#else
#define HGM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HGM_OK = 0,
  HGM_ERR_INVALID = 1,
  HGM_ERR_BUDGET = 2,
  HGM_ERR_PARSE = 3,
  HGM_ERR_UNSUPPORTED = 4,
  HGM_ERR_BUFFER = 5, /* output buffer too small; required size reported */
  HGM_ERR_INTERNAL = 6
} hgm_status;

typedef struct hgm_graph hgm_graph;
typedef struct hgm_state hgm_state;
typedef struct hgm_spectrum hgm_spectrum;

/* Message for the last failing call on this thread. */
HGM_API const char* hgm_last_error(void);
HGM_API const char* hgm_version(void);

HGM_API hgm_status hgm_set_budget(int n);
HGM_API int hgm_get_budget(void);
/* 0 selects the hardware concurrency. */
HGM_API hgm_status hgm_set_jobs(int jobs);
HGM_API int hgm_get_jobs(void);

/* ---- hypergraphs; vertex i is bit (i-1) of a mask ---- */
HGM_API hgm_status hgm_graph_build(int n, const uint64_t* masks, size_t count, hgm_graph** out);
HGM_API hgm_status hgm_graph_c_complete(int n, int c, hgm_graph** out);
HGM_API hgm_status hgm_graph_parse(const char* text, hgm_graph** out);
HGM_API hgm_status hgm_graph_load(const char* path, hgm_graph** out);
/* ccz, triangle, empty:N, 3complete:N, ncomplete:N */
HGM_API hgm_status hgm_graph_builtin(const char* name, hgm_graph** out);
HGM_API void hgm_graph_free(hgm_graph* g);
HGM_API int hgm_graph_n(const hgm_graph* g);
HGM_API size_t hgm_graph_edge_count(const hgm_graph* g);
/* 1 when the edge set is a union of complete uniform layers. */
HGM_API int hgm_graph_is_symmetric(const hgm_graph* g);
HGM_API hgm_status hgm_graph_edges(const hgm_graph* g, uint64_t* out, size_t cap);
HGM_API hgm_status hgm_graph_degrees(const hgm_graph* g, int* per_vertex, size_t cap, double* average);
/* star != 0 builds the simplified variant whose 1-edges are exactly z. */
HGM_API hgm_status hgm_graph_induced(const hgm_graph* g, uint64_t x, uint64_t z, int star, hgm_graph** out);

/* ---- phase states ---- */
HGM_API hgm_status hgm_state_from_graph(const hgm_graph* g, hgm_state** out);
HGM_API void hgm_state_free(hgm_state* s);
HGM_API int hgm_state_n(const hgm_state* s);
HGM_API int hgm_state_sign(const hgm_state* s, uint64_t a);
HGM_API int hgm_state_negated(const hgm_state* s);
HGM_API int hgm_state_equal(const hgm_state* a, const hgm_state* b);
HGM_API hgm_status hgm_state_apply_cz(hgm_state* s, uint64_t edge);
/* Applies the generalized stabilizer of g selected by `selector`, in place. */
HGM_API hgm_status hgm_state_apply_stabilizer(hgm_state* s, const hgm_graph* g, uint64_t selector);
HGM_API hgm_status hgm_phase_trace(const hgm_graph* g, int64_t* out);

/* ---- Pauli spectra ---- */
/* Component = raw / 2^n. */
HGM_API hgm_status hgm_component_direct(const hgm_state* s, uint64_t x, uint64_t z, int64_t* raw);
/* Squared component = numerator / 4^n. */
HGM_API hgm_status hgm_component_induced(const hgm_graph* g, uint64_t x, uint64_t z, uint64_t* numerator);
HGM_API hgm_status hgm_spectrum_full(const hgm_state* s, hgm_spectrum** out);
HGM_API void hgm_spectrum_free(hgm_spectrum* sp);
HGM_API hgm_status hgm_spectrum_sq_numerator(const hgm_spectrum* sp, uint64_t x, uint64_t z, uint64_t* out);
HGM_API hgm_status hgm_spectrum_write_csv(const hgm_spectrum* sp, const char* path);
HGM_API hgm_status hgm_star_trace_sum(const hgm_graph* g, double alpha, double* out);

/* ---- magic ---- */
typedef enum { HGM_METHOD_DIRECT = 0, HGM_METHOD_STAR = 1, HGM_METHOD_CLOSED = 2, HGM_METHOD_SYMMETRIC = 3 } hgm_method;

typedef struct {
  double alpha;
  double pl_moment;
  double log2_moment;
  double sre;
  hgm_method method;
  int has_exact; /* moment is an exact rational; see hgm_magic_exact */
} hgm_magic_report;

HGM_API const char* hgm_method_name(hgm_method m);
HGM_API hgm_status hgm_magic(const hgm_graph* g, const double* alphas, size_t count, hgm_method method,
                             hgm_magic_report* out);
/* Writes the exact moment "num/den" (2*alpha must be an integer). */
HGM_API hgm_status hgm_magic_exact(const hgm_graph* g, double alpha, hgm_method method, char* buf, size_t cap,
                                   size_t* needed);
HGM_API hgm_status hgm_spectrum_magic(const hgm_spectrum* sp, double alpha, hgm_magic_report* out);
HGM_API hgm_status hgm_degree_bound(const hgm_graph* g, double alpha, double* out);
HGM_API hgm_status hgm_robustness_lower_bound(const hgm_graph* g, double* out);

/* ---- symmetric families ---- */
/* family: "3complete" or "ncomplete"; alpha in {2, 0.5}. */
HGM_API hgm_status hgm_closed_form(const char* family, int n, double alpha, double* moment, double* sre, char* exact,
                                   size_t cap, size_t* needed);

/* ---- ensembles ---- */
typedef struct {
  int c;
  double p;
  int n;
  uint64_t seed;
} hgm_ensemble;

typedef struct {
  double mean;
  double std_error;
  uint64_t samples;
  double alpha;
} hgm_estimate;

typedef struct {
  double fraction;
  double floor;
  uint64_t above;
  uint64_t samples;
  double min_sre;
} hgm_concentration;

typedef enum {
  HGM_ROUTE_AUTO = 0,
  HGM_ROUTE_IDENTITY = 1,
  HGM_ROUTE_LITERAL = 2,
  HGM_ROUTE_REDUCED = 3,
  HGM_ROUTE_PLANE = 4,
  HGM_ROUTE_ZERO_SUPPORT = 5
} hgm_route;

typedef struct {
  double value;
  double log2_value;
  int sign;
  hgm_route route;
} hgm_avg_m2;

typedef struct {
  double p;
  double expected_edges;
  double target;
  double achieved;
  int evaluations;
  hgm_route route;
} hgm_edge_budget;

HGM_API hgm_status hgm_ensemble_sample(const hgm_ensemble* e, uint64_t index, hgm_graph** out);
HGM_API hgm_status hgm_monte_carlo(const hgm_ensemble* e, double alpha, uint64_t samples, hgm_estimate* out);
HGM_API hgm_status hgm_exact_average(int c, double p, int n, int alpha, double* value, char* exact, size_t cap,
                                     size_t* needed);
HGM_API hgm_status hgm_closed_m2_uniform(int n, double* value, char* exact, size_t cap, size_t* needed);
HGM_API hgm_status hgm_bound_general(int c, int alpha, int n, double* out);
HGM_API hgm_status hgm_sre_lower_bound_general(int c, int alpha, int n, double* out);
HGM_API hgm_status hgm_bound_e3_alpha(int alpha, int n, double* out);
HGM_API hgm_status hgm_variance_bound(int n, double* out);
/* tau = 1 gives N(c,alpha,n); decimal string output. */
HGM_API hgm_status hgm_counting_n(int c, int alpha, int n, int tau, char* buf, size_t cap, size_t* needed);
HGM_API hgm_status hgm_concentration_check(int n, uint64_t samples, uint64_t seed, hgm_concentration* out);
HGM_API const char* hgm_route_name(hgm_route r);
HGM_API hgm_status hgm_avg_m2_p(int n, double p, hgm_route route, hgm_avg_m2* out);
HGM_API hgm_status hgm_solve_edge_budget(int n, double gamma, hgm_edge_budget* out);

/* ---- verification suites ---- */
typedef void (*hgm_check_cb)(const char* name, int passed, const char* detail, void* user);
HGM_API size_t hgm_suite_count(void);
HGM_API const char* hgm_suite_name(size_t i);
/* n, samples = 0 select suite defaults. failures receives the failed-check count. */
HGM_API hgm_status hgm_verify(const char* suite, int n, uint64_t samples, uint64_t seed, hgm_check_cb cb, void* user,
                              int* failures);

#ifdef __cplusplus
}
#endif

#endif /* HGMAGIC_H_ */
