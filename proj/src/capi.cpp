#include "trigraph.h"

#include <cstring>
#include <sstream>
#include <string>

#include "trigraph/conditional.hpp"
#include "trigraph/cores.hpp"
#include "trigraph/rng.hpp"
#include "trigraph/ergm.hpp"
#include "trigraph/graph.hpp"
#include "trigraph/io.hpp"
#include "trigraph/local_limit.hpp"
#include "trigraph/qbasic.hpp"
#include "trigraph/tails.hpp"
#include "trigraph/variational.hpp"

using namespace trigraph;

struct tg_graph {
  Graph impl;
};

struct tg_ergm_trace {
  ErgmTrace impl;
};

struct tg_census {
  NeighborhoodCensus impl;
  std::vector<const std::string*> index;  // code order, rebuilt on creation

  void reindex() {
    index.clear();
    index.reserve(impl.counts.size());
    for (const auto& [code, count] : impl.counts) {
      (void)count;
      index.push_back(&code);
    }
  }
};

namespace {

thread_local std::string g_last_error;

tg_status fail(tg_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Maps thrown exceptions onto status codes; TG_ERR_INVALID for argument
// errors, specific codes where the type says more.
template <typename Fn>
tg_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(TG_ERR_PARSE, e.what());
  } catch (const RejectionExhausted& e) {
    return fail(TG_ERR_RUNTIME, e.what());
  } catch (const QBasicPreconditionError& e) {
    return fail(TG_ERR_INVALID, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TG_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(TG_ERR_RUNTIME, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TailStatistic to_stat(tg_statistic stat) {
  return stat == TG_STAT_T ? TailStatistic::T : TailStatistic::VT;
}

void fill_estimate(const TailEstimate& est, tg_tail_estimate* out) {
  out->statistic = est.statistic == TailStatistic::T ? TG_STAT_T : TG_STAT_VT;
  switch (est.method) {
    case TailMethod::exact: out->method = TG_TAIL_EXACT; break;
    case TailMethod::mc: out->method = TG_TAIL_MC; break;
    case TailMethod::is_clique: out->method = TG_TAIL_IS_CLIQUE; break;
    case TailMethod::analytic_lb: out->method = TG_TAIL_ANALYTIC_LB; break;
  }
  out->threshold = est.threshold;
  out->log_value = est.log_value;
  out->has_stderr = est.stderr_log.has_value();
  out->stderr_log = est.stderr_log.value_or(0.0);
  out->has_samples = est.samples.has_value();
  out->samples = est.samples.value_or(0);
  out->seed = est.seed.value_or(0);
  out->is_lower_bound = est.is_lower_bound;
  out->zero_hit_upper_bound = est.zero_hit_upper_bound;
  out->asymptotic_validity = est.asymptotic_validity;
}

CoreParams to_core_params(const tg_core_params* params) {
  CoreParams out;
  out.a = params->a;
  out.k = params->k;
  out.w = params->w;
  out.C = params->C;
  out.er = ErParams{params->n, params->lambda};
  return out;
}

}  // namespace

extern "C" {

const char* tg_last_error(void) { return g_last_error.c_str(); }

void tg_string_free(char* s) { delete[] s; }

const char* tg_version(void) { return "0.1.0"; }

/* ---------- graphs ---------- */

tg_graph* tg_graph_create(uint32_t n) { return new tg_graph{Graph(n)}; }

tg_graph* tg_graph_clone(const tg_graph* g) { return new tg_graph{g->impl}; }

void tg_graph_free(tg_graph* g) { delete g; }

uint32_t tg_graph_vertex_count(const tg_graph* g) { return g->impl.vertex_count(); }

uint64_t tg_graph_edge_count(const tg_graph* g) { return g->impl.edge_count(); }

int tg_graph_has_edge(const tg_graph* g, uint32_t u, uint32_t v) {
  return g->impl.has_edge(u, v) ? 1 : 0;
}

tg_status tg_graph_add_edge(tg_graph* g, uint32_t u, uint32_t v) {
  const uint32_t n = g->impl.vertex_count();
  if (u >= n || v >= n || u == v) return fail(TG_ERR_INVALID, "bad vertex pair");
  g->impl.add_edge(u, v);
  return TG_OK;
}

tg_status tg_graph_toggle_edge(tg_graph* g, uint32_t u, uint32_t v) {
  return guarded([&] {
    TriangleStats stats = triangle_stats(g->impl);
    toggle_edge(g->impl, stats, u, v);
    return TG_OK;
  });
}

tg_status tg_graph_read(const char* path, tg_graph** out) {
  return guarded([&] {
    *out = new tg_graph{read_edgelist_file(path)};
    return TG_OK;
  });
}

tg_status tg_graph_write(const tg_graph* g, const char* path) {
  return guarded([&] {
    write_edgelist_file(path, g->impl);
    return TG_OK;
  });
}

tg_status tg_sample_er(uint32_t n, double lambda, uint64_t seed, tg_graph** out) {
  return guarded([&] {
    *out = new tg_graph{sample_er(ErParams{n, lambda}, seed)};
    return TG_OK;
  });
}

tg_status tg_sample_er_p(uint32_t n, double p, uint64_t seed, tg_graph** out) {
  return guarded([&] {
    *out = new tg_graph{sample_er_p(n, p, seed)};
    return TG_OK;
  });
}

tg_status tg_graph_triangle_stats(const tg_graph* g, tg_triangle_stats* out) {
  return guarded([&] {
    const TriangleStats stats = triangle_stats(g->impl);
    out->total = stats.total;
    out->vt = stats.vt;
    return TG_OK;
  });
}

tg_status tg_graph_subgraph_counts(const tg_graph* g, tg_subgraph_counts* out) {
  return guarded([&] {
    const SubgraphCounts counts = subgraph_counts(g->impl);
    out->edges = counts.edges;
    out->cherries = counts.cherries;
    out->triangles = counts.triangles;
    return TG_OK;
  });
}

tg_status tg_graph_stats_json(const tg_graph* g, char** json_out) {
  return guarded([&] {
    *json_out = dup_string(stats_json(g->impl));
    return TG_OK;
  });
}

/* ---------- conditional ---------- */

tg_status tg_expected_triangles(const tg_graph* g, uint32_t ambient_n, double lambda,
                                double* out) {
  return guarded([&] {
    *out = expected_triangles_conditional(g->impl, ErParams{ambient_n, lambda});
    return TG_OK;
  });
}

tg_status tg_mc_conditional_expectation(const tg_graph* g, uint32_t ambient_n, double lambda,
                                        uint64_t samples, uint64_t seed, double* mean_out,
                                        double* stderr_out) {
  return guarded([&] {
    auto [mean, se] = mc_conditional_expectation(g->impl, ErParams{ambient_n, lambda}, samples, seed);
    *mean_out = mean;
    *stderr_out = se;
    return TG_OK;
  });
}

/* ---------- variational ---------- */

namespace {

void fill_phi(const PhiResult& result, tg_phi_result* out, tg_graph** witness_out) {
  out->value = result.value;
  out->feasible = result.feasible;
  out->witness_flagged = result.witness_flagged;
  out->witness_edges = result.witness_edges;
  if (witness_out)
    *witness_out = result.witness ? new tg_graph{*result.witness} : nullptr;
}

}  // namespace

tg_status tg_phi_clique_upper(uint32_t n, double p, double k, double a, double w,
                              tg_phi_result* out, tg_graph** witness_out) {
  return guarded([&] {
    fill_phi(clique_upper_bound(PhiQuery{n, p, k, a, w}), out, witness_out);
    return TG_OK;
  });
}

tg_status tg_phi_edge_lower(uint32_t n, double p, double k, double a, double w,
                            tg_phi_result* out) {
  return guarded([&] {
    fill_phi(edge_lower_bound(PhiQuery{n, p, k, a, w}), out, nullptr);
    return TG_OK;
  });
}

tg_status tg_phi_exact(uint32_t n, double p, double k, double a, uint32_t cap,
                       tg_phi_result* out, tg_graph** witness_out) {
  return guarded([&] {
    const PhiResult result = phi_exact(PhiQuery{n, p, k, a, 0.0}, cap);
    fill_phi(result, out, witness_out);
    return result.feasible ? TG_OK : fail(TG_ERR_INFEASIBLE, "no subgraph of K_n reaches a*k");
  });
}

double tg_rate_triangles(double k, double p) { return rate_triangles(k, p); }

double tg_rate_vt(double k) { return rate_vt(k); }

tg_status tg_compute_correction_terms(uint32_t n, double p, double k, double a, double w,
                                      double C, double Cprime, double m,
                                      tg_correction_terms* out) {
  return guarded([&] {
    const CorrectionTerms terms = correction_terms(n, p, k, a, w, C, Cprime, m);
    out->psi_n = terms.psi_n;
    out->xi_n = terms.xi_n;
    out->log_xi_n = terms.log_xi_n;
    out->big_psi_n = terms.big_psi_n;
    out->t_n = terms.t_n;
    out->eps_n = terms.eps_n;
    out->m = terms.m;
    return TG_OK;
  });
}

/* ---------- cores ---------- */

tg_status tg_is_seed(const tg_graph* g, const tg_core_params* params, tg_seed_report* out) {
  return guarded([&] {
    const SeedCertificate cert = is_seed(g->impl, to_core_params(params));
    out->s1 = cert.s1;
    out->s2 = cert.s2;
    out->is_seed = cert.is_seed;
    out->expected_triangles = cert.expected_triangles;
    out->s1_threshold = cert.s1_threshold;
    out->edges = cert.edges;
    out->edge_budget = cert.edge_budget;
    return TG_OK;
  });
}

tg_status tg_extract_core(const tg_graph* g, const tg_core_params* params, tg_core_report* out,
                          tg_graph** core_out) {
  return guarded([&] {
    CoreCertificate cert = extract_core(g->impl, to_core_params(params));
    out->c1 = cert.c1;
    out->c2 = cert.c2;
    out->c3 = cert.c3;
    out->expected_triangles = cert.expected_triangles;
    out->c1_threshold = cert.c1_threshold;
    out->edges = cert.edges;
    out->edge_budget = cert.edge_budget;
    out->min_edge_drop = cert.min_edge_drop;
    out->t_n = cert.t_n;
    out->steps = cert.steps.size();
    out->drop_total = cert.drop_total;
    if (core_out) *core_out = new tg_graph{std::move(cert.graph)};
    return TG_OK;
  });
}

tg_status tg_core_certificate_json(const tg_graph* g, const tg_core_params* params,
                                   char** json_out) {
  return guarded([&] {
    const CoreParams cp = to_core_params(params);
    const SeedCertificate seed = is_seed(g->impl, cp);
    const CoreCertificate core = extract_core(g->impl, cp);
    std::ostringstream ss;
    ss.precision(17);
    ss << "{\"params\":{\"a\":" << cp.a << ",\"k\":" << cp.k << ",\"w\":" << cp.w
       << ",\"C\":" << cp.C << ",\"n\":" << cp.er.n << ",\"lambda\":" << cp.er.lambda
       << ",\"t_n\":" << cp.t() << ",\"edge_budget\":" << cp.edge_budget() << "},";
    ss << "\"seed\":{\"s1\":" << (seed.s1 ? "true" : "false")
       << ",\"s2\":" << (seed.s2 ? "true" : "false")
       << ",\"is_seed\":" << (seed.is_seed ? "true" : "false")
       << ",\"expected_triangles\":" << seed.expected_triangles
       << ",\"s1_threshold\":" << seed.s1_threshold << ",\"edges\":" << seed.edges << "},";
    ss << "\"core\":{\"c1\":" << (core.c1 ? "true" : "false")
       << ",\"c2\":" << (core.c2 ? "true" : "false")
       << ",\"c3\":" << (core.c3 ? "true" : "false")
       << ",\"expected_triangles\":" << core.expected_triangles
       << ",\"c1_threshold\":" << core.c1_threshold << ",\"edges\":" << core.edges
       << ",\"min_edge_drop\":" << core.min_edge_drop << ",\"drop_total\":" << core.drop_total
       << ",\"steps\":[";
    for (std::size_t i = 0; i < core.steps.size(); ++i) {
      if (i) ss << ',';
      ss << "{\"u\":" << core.steps[i].u << ",\"v\":" << core.steps[i].v
         << ",\"drop\":" << core.steps[i].drop << "}";
    }
    ss << "],\"edge_list\":[";
    bool first = true;
    for (auto [u, v] : core.graph.edges()) {
      if (!first) ss << ',';
      first = false;
      ss << '[' << u << ',' << v << ']';
    }
    ss << "]}}";
    *json_out = dup_string(ss.str());
    return TG_OK;
  });
}

tg_status tg_core_count_bound(double m, uint32_t n, double t_n, double cprime, double lambda,
                              double* log_count, int* valid_regime, int* clamped) {
  return guarded([&] {
    const CoreCountBound bound = core_count_bound(m, n, t_n, cprime, lambda);
    *log_count = bound.log_count;
    *valid_regime = bound.valid_regime;
    *clamped = bound.clamped;
    return TG_OK;
  });
}

tg_status tg_seed_failure_bound(double a, double w, double k, double p, double C, double ell,
                                double* bound, double* log_xi_n) {
  return guarded([&] {
    const SeedFailureBound result = seed_failure_bound(a, w, k, p, C, ell);
    *bound = result.bound;
    *log_xi_n = result.log_xi_n;
    return TG_OK;
  });
}

tg_status tg_near_clique_check(const tg_graph* g, double delta, tg_near_clique_report* out) {
  return guarded([&] {
    const NearCliqueReport report = near_clique_check(g->impl, delta);
    out->delta = report.delta;
    out->m = report.m;
    out->min_degree = report.min_degree;
    out->threshold = report.threshold;
    out->passes = report.passes;
    return TG_OK;
  });
}

tg_status tg_high_min_degree_subgraph(const tg_graph* g, double delta, tg_graph** subgraph_out,
                                      int* regime_ok, double* threshold) {
  return guarded([&] {
    PeelReport report = high_min_degree_subgraph(g->impl, delta);
    *regime_ok = report.regime_ok;
    *threshold = report.threshold;
    *subgraph_out = report.subgraph ? new tg_graph{std::move(*report.subgraph)} : nullptr;
    return TG_OK;
  });
}

/* ---------- q-basic ---------- */

int tg_is_qbasic(const tg_graph* g) { return is_qbasic(g->impl) ? 1 : 0; }

tg_status tg_extract_qbasic(const tg_graph* g, tg_graph** out) {
  return guarded([&] {
    *out = new tg_graph{extract_qbasic(g->impl)};
    return TG_OK;
  });
}

tg_status tg_qbasic_decomposition_json(const tg_graph* g, char** json_out) {
  return guarded([&] {
    const QBasicDecomposition d = decompose_qbasic(g->impl);
    std::ostringstream ss;
    auto list = [&ss](const std::vector<std::uint32_t>& vs) {
      ss << '[';
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) ss << ',';
        ss << vs[i];
      }
      ss << ']';
    };
    ss << "{\"v1\":";
    list(d.v1);
    ss << ",\"triangles\":[";
    for (std::size_t i = 0; i < d.triangles1.size(); ++i) {
      if (i) ss << ',';
      ss << '[' << d.triangles1[i][0] << ',' << d.triangles1[i][1] << ',' << d.triangles1[i][2]
         << ']';
    }
    ss << "],\"v2\":";
    list(d.v2);
    ss << ",\"matching\":[";
    for (std::size_t i = 0; i < d.matching2.size(); ++i) {
      if (i) ss << ',';
      ss << '[' << d.matching2[i][0] << ',' << d.matching2[i][1] << ']';
    }
    ss << "],\"coneighbors\":";
    list(d.coneighbor2);
    ss << ",\"v3\":";
    list(d.v3);
    ss << ",\"witnesses\":[";
    for (std::size_t i = 0; i < d.witness3.size(); ++i) {
      if (i) ss << ',';
      ss << '[' << d.witness3[i][0] << ',' << d.witness3[i][1] << ']';
    }
    ss << "]}";
    *json_out = dup_string(ss.str());
    return TG_OK;
  });
}

tg_status tg_configuration_count_bound(uint64_t n, uint64_t l1, uint64_t l2, uint64_t l3,
                                       double* log_count, int* degenerate) {
  return guarded([&] {
    const ConfigurationCountBound bound = configuration_count_bound(n, l1, l2, l3);
    *log_count = bound.log_count;
    *degenerate = bound.degenerate;
    return TG_OK;
  });
}

tg_status tg_qbasic_edge_count_bound(uint64_t n, uint64_t q, uint64_t m, double* out) {
  return guarded([&] {
    *out = qbasic_edge_count_bound(n, q, m);
    return TG_OK;
  });
}

tg_status tg_minimize_entropy(double q, tg_entropy_solution* out) {
  return guarded([&] {
    const EntropySolution sol = minimize_entropy(q);
    out->mu = sol.mu;
    out->x1 = sol.x1;
    out->x2 = sol.x2;
    out->x3 = sol.x3;
    out->value = sol.value;
    out->constraint_residual = sol.constraint_residual;
    out->stationarity_residual = sol.stationarity_residual;
    out->localization_checked = sol.localization_checked;
    out->localization_ok = sol.localization_ok;
    return TG_OK;
  });
}

/* ---------- tails ---------- */

tg_status tg_tail_exact(uint32_t n, double p, tg_statistic stat, double k, int allow_n8,
                        unsigned threads, tg_tail_estimate* out) {
  return guarded([&] {
    fill_estimate(exact_tail(n, p, to_stat(stat), k, allow_n8 != 0, threads), out);
    return TG_OK;
  });
}

tg_status tg_tail_mc(uint32_t n, double p, tg_statistic stat, double k, uint64_t samples,
                     uint64_t seed, unsigned threads, tg_tail_estimate* out) {
  return guarded([&] {
    fill_estimate(mc_tail(n, p, to_stat(stat), k, samples, seed, threads), out);
    return TG_OK;
  });
}

tg_status tg_tail_is_clique(uint32_t n, double p, double k, uint32_t r, uint64_t samples,
                            uint64_t seed, unsigned threads, tg_tail_estimate* out) {
  return guarded([&] {
    fill_estimate(is_clique_tail(n, p, k, r, samples, seed, threads), out);
    return TG_OK;
  });
}

tg_status tg_tail_clique_lower_bound(uint32_t n, double p, double k, tg_tail_estimate* out) {
  return guarded([&] {
    fill_estimate(clique_lower_bound(n, p, k), out);
    return TG_OK;
  });
}

tg_status tg_tail_disjoint_triangles(uint32_t n, double p, uint64_t k, double lambda,
                                     tg_tail_estimate* out) {
  return guarded([&] {
    fill_estimate(disjoint_triangles_lower_bound(n, p, k, lambda), out);
    return TG_OK;
  });
}

tg_status tg_conditioned_sample(uint32_t n, double p, tg_statistic stat, double k,
                                uint64_t seed, uint64_t max_tries, tg_graph** out,
                                uint64_t* tries_out) {
  return guarded([&] {
    ConditionedSample sample = conditioned_sample(n, p, to_stat(stat), k, seed, max_tries);
    *out = new tg_graph{std::move(sample.graph)};
    *tries_out = sample.tries;
    return TG_OK;
  });
}

/* ---------- ergm ---------- */

tg_status tg_ergm_run(const tg_ergm_config* config, tg_ergm_trace** out) {
  return guarded([&] {
    ErgmConfig cpp;
    cpp.n = config->n;
    cpp.lambda = config->lambda;
    cpp.beta = config->beta;
    cpp.steps = config->steps;
    cpp.burn_in = config->burn_in;
    cpp.thin = config->thin;
    cpp.seed = config->seed;
    cpp.init = config->init_complete ? ErgmInit::complete : ErgmInit::empty;
    *out = new tg_ergm_trace{ergm_mcmc(cpp)};
    return TG_OK;
  });
}

void tg_ergm_trace_free(tg_ergm_trace* trace) { delete trace; }

uint64_t tg_ergm_trace_len(const tg_ergm_trace* trace) { return trace->impl.vt.size(); }

uint32_t tg_ergm_trace_vt(const tg_ergm_trace* trace, uint64_t i) { return trace->impl.vt[i]; }

double tg_ergm_trace_mean_vt(const tg_ergm_trace* trace) { return trace->impl.mean_vt(); }

double tg_ergm_trace_stderr_vt(const tg_ergm_trace* trace) { return trace->impl.stderr_vt(); }

double tg_ergm_trace_acceptance(const tg_ergm_trace* trace) {
  return trace->impl.acceptance_rate;
}

tg_graph* tg_ergm_trace_final_graph(const tg_ergm_trace* trace) {
  return new tg_graph{trace->impl.final_graph};
}

tg_status tg_ergm_exact_log_partition(uint32_t n, double lambda, double beta, double* out) {
  return guarded([&] {
    *out = ergm_exact_log_partition(n, lambda, beta);
    return TG_OK;
  });
}

tg_status tg_ergm_exact_mean_vt(uint32_t n, double lambda, double beta, double* out) {
  return guarded([&] {
    *out = ergm_exact_mean_vt(n, lambda, beta);
    return TG_OK;
  });
}

double tg_partition_scaling(double beta) { return partition_scaling(beta); }

tg_status tg_ergm_sweep(uint32_t n, double lambda, const double* betas, size_t n_betas,
                        uint64_t steps, uint64_t burn_in, uint64_t thin, uint64_t master_seed,
                        int paired, double mixing_tolerance, unsigned threads,
                        tg_ergm_sweep_row* rows) {
  return guarded([&] {
    const std::vector<double> beta_list(betas, betas + n_betas);
    const auto result = ergm_sweep(n, lambda, beta_list, steps, burn_in, thin, master_seed,
                                   paired != 0, mixing_tolerance, threads);
    for (std::size_t i = 0; i < result.size(); ++i) {
      rows[i].beta = result[i].beta;
      rows[i].init_complete = result[i].init == ErgmInit::complete;
      rows[i].mean_vt_fraction = result[i].mean_vt_fraction;
      rows[i].stderr_fraction = result[i].stderr_fraction;
      rows[i].acceptance_rate = result[i].acceptance_rate;
      rows[i].mixing_warning = result[i].mixing_warning;
    }
    return TG_OK;
  });
}

/* ---------- censuses ---------- */

namespace {

tg_census* wrap_census(NeighborhoodCensus&& census) {
  auto* out = new tg_census{std::move(census), {}};
  out->reindex();
  return out;
}

}  // namespace

tg_status tg_census_graph(const tg_graph* g, int depth, uint64_t sample_size, uint64_t seed,
                          tg_census** out) {
  return guarded([&] {
    *out = wrap_census(neighborhood_census(g->impl, depth, sample_size, seed));
    return TG_OK;
  });
}

tg_status tg_census_er(uint32_t n, double lambda, uint64_t graphs, int depth, uint64_t seed,
                       double condition_t, uint64_t max_tries, tg_census** out) {
  return guarded([&] {
    NeighborhoodCensus census;
    census.depth = depth;
    const double p = lambda / n;
    for (uint64_t i = 0; i < graphs; ++i) {
      Graph g = condition_t < 0
                    ? sample_er_p(n, p, Rng::substream(seed, i).next())
                    : conditioned_sample(n, p, TailStatistic::T, condition_t,
                                         Rng::substream(seed, i).next(), max_tries)
                          .graph;
      census.merge(neighborhood_census(g, depth));
    }
    *out = wrap_census(std::move(census));
    return TG_OK;
  });
}

tg_status tg_census_ugw(double lambda, int depth, uint64_t samples, uint64_t seed,
                        uint64_t size_cap, tg_census** out) {
  return guarded([&] {
    *out = wrap_census(sample_ugw_census(lambda, depth, samples, seed, size_cap));
    return TG_OK;
  });
}

void tg_census_free(tg_census* census) { delete census; }

int tg_census_depth(const tg_census* census) { return census->impl.depth; }

uint64_t tg_census_sample_size(const tg_census* census) { return census->impl.sample_size; }

uint64_t tg_census_overflow(const tg_census* census) { return census->impl.overflow_count; }

uint64_t tg_census_entry_count(const tg_census* census) { return census->index.size(); }

const char* tg_census_entry_code(const tg_census* census, uint64_t index) {
  return census->index[index]->c_str();
}

uint64_t tg_census_entry_frequency(const tg_census* census, uint64_t index) {
  return census->impl.counts.at(*census->index[index]);
}

tg_status tg_census_tv(const tg_census* a, const tg_census* b, double* out) {
  return guarded([&] {
    *out = census_tv(a->impl, b->impl);
    return TG_OK;
  });
}

tg_status tg_census_depth1_tv_poisson(const tg_census* census, double lambda, double* out) {
  return guarded([&] {
    *out = census_depth1_tv_to_poisson(census->impl, lambda);
    return TG_OK;
  });
}

tg_status tg_census_json(const tg_census* census, char** json_out) {
  return guarded([&] {
    *json_out = dup_string(census_to_json(census->impl));
    return TG_OK;
  });
}

tg_status tg_local_experiment(uint32_t n, double lambda, double k, int depth,
                              uint64_t graph_samples, uint64_t seed, tg_census** cond_out,
                              tg_census** uncond_out, tg_census** ugw_out,
                              double* tv_cond_uncond, double* tv_cond_ugw) {
  return guarded([&] {
    LocalExperimentResult result =
        conditional_local_experiment(n, lambda, k, depth, graph_samples, seed);
    *tv_cond_uncond = result.tv_cond_uncond;
    *tv_cond_ugw = result.tv_cond_ugw;
    *cond_out = wrap_census(std::move(result.cond));
    *uncond_out = wrap_census(std::move(result.uncond));
    *ugw_out = wrap_census(std::move(result.ugw));
    return TG_OK;
  });
}

} /* extern "C" */
