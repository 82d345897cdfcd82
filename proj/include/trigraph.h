/* C API of the trigraph shared library: sparse Erdos-Renyi graphs with
 * many triangles - statistics, conditional expectations, the variational
 * problem, seed/core and q-basic machinery, tail estimators, the
 * V_T-tilted exponential random graph, and rooted-neighborhood censuses.
 *
 * All functions returning tg_status set a thread-local message readable
 * through tg_last_error() on failure. Objects returned through out
 * parameters are owned by the caller and released with the matching
 * _free function; strings with tg_string_free.
 */
#ifndef TRIGRAPH_H
#define TRIGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_INVALID = 1,    /* bad arguments or preconditions */
  TG_ERR_PARSE = 2,      /* malformed input (message carries line number) */
  TG_ERR_LIMIT = 3,      /* enumeration or size cap exceeded */
  TG_ERR_INFEASIBLE = 4, /* no feasible point */
  TG_ERR_RUNTIME = 5     /* I/O or sampling failure */
} tg_status;

const char* tg_last_error(void);
void tg_string_free(char* s);
const char* tg_version(void);

/* ---------- graphs ---------- */

typedef struct tg_graph tg_graph;

tg_graph* tg_graph_create(uint32_t n);
tg_graph* tg_graph_clone(const tg_graph* g);
void tg_graph_free(tg_graph* g);

uint32_t tg_graph_vertex_count(const tg_graph* g);
uint64_t tg_graph_edge_count(const tg_graph* g);
int tg_graph_has_edge(const tg_graph* g, uint32_t u, uint32_t v);
tg_status tg_graph_add_edge(tg_graph* g, uint32_t u, uint32_t v);
tg_status tg_graph_toggle_edge(tg_graph* g, uint32_t u, uint32_t v);

/* Edge-list text format: "n m" header, then "u v" lines with u < v. */
tg_status tg_graph_read(const char* path, tg_graph** out);
tg_status tg_graph_write(const tg_graph* g, const char* path);

tg_status tg_sample_er(uint32_t n, double lambda, uint64_t seed, tg_graph** out);
tg_status tg_sample_er_p(uint32_t n, double p, uint64_t seed, tg_graph** out);

typedef struct tg_triangle_stats {
  uint64_t total;
  uint32_t vt;
} tg_triangle_stats;
tg_status tg_graph_triangle_stats(const tg_graph* g, tg_triangle_stats* out);

typedef struct tg_subgraph_counts {
  uint64_t edges;
  uint64_t cherries;
  uint64_t triangles;
} tg_subgraph_counts;
tg_status tg_graph_subgraph_counts(const tg_graph* g, tg_subgraph_counts* out);

/* {"n":...,"edges":...,"triangles":...,"vt":...} */
tg_status tg_graph_stats_json(const tg_graph* g, char** json_out);

/* ---------- conditional expectation ---------- */

/* E_G(T) for G_{ambient_n, lambda/ambient_n} conditioned on containing g. */
tg_status tg_expected_triangles(const tg_graph* g, uint32_t ambient_n, double lambda,
                                double* out);
tg_status tg_mc_conditional_expectation(const tg_graph* g, uint32_t ambient_n, double lambda,
                                        uint64_t samples, uint64_t seed, double* mean_out,
                                        double* stderr_out);

/* ---------- variational problem ---------- */

typedef struct tg_phi_result {
  double value; /* natural-log units */
  int feasible;
  int witness_flagged; /* clique witness did not fit in n */
  uint64_t witness_edges;
} tg_phi_result;

/* witness_out may be NULL; on success *witness_out is NULL when no
 * witness exists. */
tg_status tg_phi_clique_upper(uint32_t n, double p, double k, double a, double w,
                              tg_phi_result* out, tg_graph** witness_out);
tg_status tg_phi_edge_lower(uint32_t n, double p, double k, double a, double w,
                            tg_phi_result* out);
tg_status tg_phi_exact(uint32_t n, double p, double k, double a, uint32_t cap,
                       tg_phi_result* out, tg_graph** witness_out);

double tg_rate_triangles(double k, double p);
double tg_rate_vt(double k);

typedef struct tg_correction_terms {
  double psi_n;
  double xi_n;
  double log_xi_n;
  double big_psi_n;
  double t_n;
  double eps_n;
  double m;
} tg_correction_terms;
tg_status tg_compute_correction_terms(uint32_t n, double p, double k, double a, double w,
                                      double C, double Cprime, double m,
                                      tg_correction_terms* out);

/* ---------- seeds and cores ---------- */

typedef struct tg_core_params {
  double a;
  double k;
  double w;
  double C;
  uint32_t n;
  double lambda;
} tg_core_params;

typedef struct tg_seed_report {
  int s1, s2, is_seed;
  double expected_triangles;
  double s1_threshold;
  uint64_t edges;
  double edge_budget;
} tg_seed_report;
tg_status tg_is_seed(const tg_graph* g, const tg_core_params* params, tg_seed_report* out);

typedef struct tg_core_report {
  int c1, c2, c3;
  double expected_triangles;
  double c1_threshold;
  uint64_t edges;
  double edge_budget;
  double min_edge_drop;
  double t_n;
  uint64_t steps;
  double drop_total;
} tg_core_report;
tg_status tg_extract_core(const tg_graph* g, const tg_core_params* params, tg_core_report* out,
                          tg_graph** core_out);

/* Seed certificate, core certificate, deletion trail and the core's edge
 * list, rendered as JSON. */
tg_status tg_core_certificate_json(const tg_graph* g, const tg_core_params* params,
                                   char** json_out);

tg_status tg_core_count_bound(double m, uint32_t n, double t_n, double cprime, double lambda,
                              double* log_count, int* valid_regime, int* clamped);
tg_status tg_seed_failure_bound(double a, double w, double k, double p, double C, double ell,
                                double* bound, double* log_xi_n);

typedef struct tg_near_clique_report {
  double delta;
  uint64_t m;
  uint64_t min_degree;
  double threshold;
  int passes;
} tg_near_clique_report;
tg_status tg_near_clique_check(const tg_graph* g, double delta, tg_near_clique_report* out);

/* *subgraph_out is NULL when peeling empties the graph. */
tg_status tg_high_min_degree_subgraph(const tg_graph* g, double delta, tg_graph** subgraph_out,
                                      int* regime_ok, double* threshold);

/* ---------- q-basic graphs ---------- */

int tg_is_qbasic(const tg_graph* g);
tg_status tg_extract_qbasic(const tg_graph* g, tg_graph** out);

/* {v1, triangles, v2, matching, coneighbors, v3, witnesses} for the
 * decomposition of g (which must have every edge in a triangle). */
tg_status tg_qbasic_decomposition_json(const tg_graph* g, char** json_out);

tg_status tg_configuration_count_bound(uint64_t n, uint64_t l1, uint64_t l2, uint64_t l3,
                                       double* log_count, int* degenerate);
tg_status tg_qbasic_edge_count_bound(uint64_t n, uint64_t q, uint64_t m, double* out);

typedef struct tg_entropy_solution {
  double mu, x1, x2, x3, value;
  double constraint_residual;
  double stationarity_residual;
  int localization_checked;
  int localization_ok;
} tg_entropy_solution;
tg_status tg_minimize_entropy(double q, tg_entropy_solution* out);

/* ---------- tail probabilities ---------- */

typedef enum tg_statistic { TG_STAT_T = 0, TG_STAT_VT = 1 } tg_statistic;
typedef enum tg_tail_method {
  TG_TAIL_EXACT = 0,
  TG_TAIL_MC = 1,
  TG_TAIL_IS_CLIQUE = 2,
  TG_TAIL_ANALYTIC_LB = 3
} tg_tail_method;

typedef struct tg_tail_estimate {
  int statistic;
  int method;
  double threshold;
  double log_value;
  double stderr_log; /* valid when has_stderr */
  int has_stderr;
  uint64_t samples; /* valid when has_samples */
  int has_samples;
  uint64_t seed;
  int is_lower_bound;
  int zero_hit_upper_bound;
  int asymptotic_validity;
} tg_tail_estimate;

tg_status tg_tail_exact(uint32_t n, double p, tg_statistic stat, double k, int allow_n8,
                        unsigned threads, tg_tail_estimate* out);
tg_status tg_tail_mc(uint32_t n, double p, tg_statistic stat, double k, uint64_t samples,
                     uint64_t seed, unsigned threads, tg_tail_estimate* out);
tg_status tg_tail_is_clique(uint32_t n, double p, double k, uint32_t r, uint64_t samples,
                            uint64_t seed, unsigned threads, tg_tail_estimate* out);
tg_status tg_tail_clique_lower_bound(uint32_t n, double p, double k, tg_tail_estimate* out);
tg_status tg_tail_disjoint_triangles(uint32_t n, double p, uint64_t k, double lambda,
                                     tg_tail_estimate* out);
tg_status tg_conditioned_sample(uint32_t n, double p, tg_statistic stat, double k,
                                uint64_t seed, uint64_t max_tries, tg_graph** out,
                                uint64_t* tries_out);

/* ---------- exponential random graph ---------- */

typedef struct tg_ergm_config {
  uint32_t n;
  double lambda;
  double beta; /* tilt is beta * log(n) * V_T */
  uint64_t steps;
  uint64_t burn_in;
  uint64_t thin;
  uint64_t seed;
  int init_complete; /* 0 = empty start, 1 = complete start */
} tg_ergm_config;

typedef struct tg_ergm_trace tg_ergm_trace;

tg_status tg_ergm_run(const tg_ergm_config* config, tg_ergm_trace** out);
void tg_ergm_trace_free(tg_ergm_trace* trace);
uint64_t tg_ergm_trace_len(const tg_ergm_trace* trace);
uint32_t tg_ergm_trace_vt(const tg_ergm_trace* trace, uint64_t i);
double tg_ergm_trace_mean_vt(const tg_ergm_trace* trace);
double tg_ergm_trace_stderr_vt(const tg_ergm_trace* trace);
double tg_ergm_trace_acceptance(const tg_ergm_trace* trace);
tg_graph* tg_ergm_trace_final_graph(const tg_ergm_trace* trace);

tg_status tg_ergm_exact_log_partition(uint32_t n, double lambda, double beta, double* out);
tg_status tg_ergm_exact_mean_vt(uint32_t n, double lambda, double beta, double* out);
double tg_partition_scaling(double beta);

typedef struct tg_ergm_sweep_row {
  double beta;
  int init_complete;
  double mean_vt_fraction;
  double stderr_fraction;
  double acceptance_rate;
  int mixing_warning;
} tg_ergm_sweep_row;

/* rows must hold n_betas * (paired ? 2 : 1) entries. */
tg_status tg_ergm_sweep(uint32_t n, double lambda, const double* betas, size_t n_betas,
                        uint64_t steps, uint64_t burn_in, uint64_t thin, uint64_t master_seed,
                        int paired, double mixing_tolerance, unsigned threads,
                        tg_ergm_sweep_row* rows);

/* ---------- neighborhood censuses ---------- */

typedef struct tg_census tg_census;

tg_status tg_census_graph(const tg_graph* g, int depth, uint64_t sample_size, uint64_t seed,
                          tg_census** out);
/* condition_t < 0 disables conditioning; otherwise graphs are rejected
 * until T >= condition_t. */
tg_status tg_census_er(uint32_t n, double lambda, uint64_t graphs, int depth, uint64_t seed,
                       double condition_t, uint64_t max_tries, tg_census** out);
tg_status tg_census_ugw(double lambda, int depth, uint64_t samples, uint64_t seed,
                        uint64_t size_cap, tg_census** out);
void tg_census_free(tg_census* census);

int tg_census_depth(const tg_census* census);
uint64_t tg_census_sample_size(const tg_census* census);
uint64_t tg_census_overflow(const tg_census* census);
uint64_t tg_census_entry_count(const tg_census* census);
/* Entries are ordered by code; index < tg_census_entry_count. The
 * returned pointer is owned by the census. */
const char* tg_census_entry_code(const tg_census* census, uint64_t index);
uint64_t tg_census_entry_frequency(const tg_census* census, uint64_t index);

tg_status tg_census_tv(const tg_census* a, const tg_census* b, double* out);
tg_status tg_census_depth1_tv_poisson(const tg_census* census, double lambda, double* out);
tg_status tg_census_json(const tg_census* census, char** json_out);

tg_status tg_local_experiment(uint32_t n, double lambda, double k, int depth,
                              uint64_t graph_samples, uint64_t seed, tg_census** cond_out,
                              tg_census** uncond_out, tg_census** ugw_out,
                              double* tv_cond_uncond, double* tv_cond_ugw);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIGRAPH_H */
