// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances and seeds are pinned here; stochastic criteria are re-run
// for byte-identical reproducibility at the end.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trigraph/conditional.hpp"
#include "trigraph/cores.hpp"
#include "trigraph/ergm.hpp"
#include "trigraph/graph.hpp"
#include "trigraph/io.hpp"
#include "trigraph/local_limit.hpp"
#include "trigraph/qbasic.hpp"
#include "trigraph/rng.hpp"
#include "trigraph/smallgraph.hpp"
#include "trigraph/tails.hpp"
#include "trigraph/variational.hpp"

using namespace trigraph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string digest;  // serialized stochastic results, for criterion 10

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Graph complete(std::uint32_t r, std::uint32_t ambient) {
  Graph g(ambient);
  for (std::uint32_t u = 0; u < r; ++u)
    for (std::uint32_t v = u + 1; v < r; ++v) g.add_edge(u, v);
  return g;
}

// Brute-force oracles used only by this suite.
std::uint64_t oracle_triangles(const Graph& g, std::vector<std::uint64_t>* per_vertex) {
  const std::uint32_t n = g.vertex_count();
  if (per_vertex) per_vertex->assign(n, 0);
  std::uint64_t total = 0;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      for (std::uint32_t w = v + 1; w < n; ++w)
        if (g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w)) {
          ++total;
          if (per_vertex) {
            ++(*per_vertex)[u];
            ++(*per_vertex)[v];
            ++(*per_vertex)[w];
          }
        }
  return total;
}

std::uint32_t oracle_vt(const Graph& g) {
  std::vector<std::uint64_t> per_vertex;
  oracle_triangles(g, &per_vertex);
  std::uint32_t vt = 0;
  for (auto c : per_vertex)
    if (c > 0) ++vt;
  return vt;
}

bool oracle_is_qbasic(const Graph& g) {
  const std::uint32_t q = oracle_vt(g);
  for (auto [u, v] : g.edges()) {
    Graph removed = g;
    removed.remove_edge(u, v);
    if (oracle_vt(removed) >= q) return false;
  }
  return true;
}

double oracle_expected_triangles(const Graph& g, std::uint32_t ambient_n, double p) {
  double total = 0.0;
  for (std::uint32_t u = 0; u < ambient_n; ++u)
    for (std::uint32_t v = u + 1; v < ambient_n; ++v)
      for (std::uint32_t w = v + 1; w < ambient_n; ++w) {
        const int present = g.has_edge(u, v) + g.has_edge(u, w) + g.has_edge(v, w);
        total += std::pow(p, 3 - present);
      }
  return total;
}

// ---------------------------------------------------------------- 1
Outcome criterion1() {
  Outcome out;
  const std::uint32_t n = 6;
  SmallGraphSpace space(n);
  std::uint64_t violations = 0;
  for (std::uint64_t mask = 0; mask < space.total_graphs(); ++mask) {
    const Graph g = space.to_graph(static_cast<std::uint32_t>(mask));
    std::vector<std::uint64_t> oracle_per_vertex;
    const std::uint64_t t_oracle = oracle_triangles(g, &oracle_per_vertex);

    const TriangleStats stats = triangle_stats(g);
    if (stats.total != t_oracle || stats.per_vertex != oracle_per_vertex) ++violations;
    std::uint32_t vt_oracle = 0;
    for (auto c : oracle_per_vertex)
      if (c > 0) ++vt_oracle;
    if (stats.vt != vt_oracle) ++violations;

    const SubgraphCounts counts = subgraph_counts(g);
    std::uint64_t cherries = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint64_t d = g.degree(v);
      cherries += d * (d - 1) / 2;
    }
    if (counts.triangles != t_oracle || counts.edges != g.edge_count() ||
        counts.cherries != cherries)
      ++violations;

    if (is_qbasic(g) != oracle_is_qbasic(g)) ++violations;

    const double e = static_cast<double>(g.edge_count());
    if (static_cast<double>(stats.total) > std::pow(2.0 * e, 1.5) / 6.0 + 1e-9) ++violations;
    if (g.edge_count() < stats.vt) ++violations;
  }
  out.require(violations == 0, "violations=" + std::to_string(violations));
  return out;
}

// ---------------------------------------------------------------- 2
Outcome criterion2() {
  Outcome out;
  for (std::uint32_t n = 2; n <= 6; ++n) {
    SmallGraphSpace space(n);
    const double p = 0.37;
    const ErParams params{n, p * n};
    for (std::uint64_t mask = 0; mask < space.total_graphs(); ++mask) {
      const Graph g = space.to_graph(static_cast<std::uint32_t>(mask));
      const double closed = expected_triangles_conditional(g, params);
      const double brute = oracle_expected_triangles(g, n, p);
      if (std::abs(closed - brute) > 1e-12 * std::max(1.0, std::abs(brute))) {
        out.require(false, "closed form mismatch at n=" + std::to_string(n));
        return out;
      }
      if (closed > conditional_upper_bound(g, params) + 1e-12) {
        out.require(false, "upper bound violated at n=" + std::to_string(n));
        return out;
      }
    }
  }
  const Graph planted = complete(4, 10);
  const ErParams params{10, 2.0};
  const double closed = expected_triangles_conditional(planted, params);
  auto [mean, se] = mc_conditional_expectation(planted, params, 100000, 20250809);
  out.digest = fmt(mean) + "," + fmt(se);
  out.require(std::abs(mean - closed) <= 3 * se,
              "mc " + fmt(mean) + " vs closed " + fmt(closed) + " (3se=" + fmt(3 * se) + ")");
  out.require(closed <= conditional_upper_bound(planted, params), "bound at K_4/n=10");
  return out;
}

// ---------------------------------------------------------------- 3
Outcome criterion3() {
  Outcome out;
  const std::uint32_t n = 7;
  const double lambda = 1.5, p = lambda / n;
  std::ostringstream digest;

  struct Point {
    TailStatistic stat;
    double k;
  };
  const std::vector<Point> mc_points = {{TailStatistic::T, 1},
                                        {TailStatistic::T, 2},
                                        {TailStatistic::T, 3},
                                        {TailStatistic::VT, 3},
                                        {TailStatistic::VT, 6}};
  for (const auto& point : mc_points) {
    const TailEstimate exact = exact_tail(n, p, point.stat, point.k, false, 4);
    const TailEstimate mc = mc_tail(n, p, point.stat, point.k, 1000000, 33, 4);
    digest << fmt(mc.log_value) << ";";
    const double se_prob = mc.stderr_log.value_or(0.0) * mc.value();
    out.require(std::abs(mc.value() - exact.value()) <= 3 * se_prob,
                "mc mismatch at k=" + fmt(point.k));
  }

  for (std::uint32_t k = 1; k <= 35; ++k) {
    const TailEstimate exact = exact_tail(n, p, TailStatistic::T, k, false, 4);
    const TailEstimate lb = clique_lower_bound(n, p, k);
    out.require(lb.log_value <= exact.log_value + 1e-12,
                "clique lower bound above exact at k=" + std::to_string(k));
    const std::uint32_t r = std::min<std::uint32_t>(clique_size_for(k), 6);
    const TailEstimate is = is_clique_tail(n, p, k, r, 20000, 50 + k, 4);
    digest << fmt(is.log_value) << ";";
    const double se_prob = is.stderr_log.value_or(0.0) * is.value();
    out.require(is.value() <= exact.value() + 3 * se_prob,
                "is estimate above exact at k=" + std::to_string(k));
  }
  out.digest = digest.str();
  return out;
}

// ---------------------------------------------------------------- 4
Outcome criterion4() {
  Outcome out;
  std::uint64_t edge_total = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Graph g = sample_er(ErParams{100, 3.0}, seed);
    const std::uint32_t q = triangle_stats(g).vt;
    const Graph basic = extract_qbasic(g);
    edge_total += basic.edge_count();
    const TriangleStats stats = triangle_stats(basic);
    if (stats.vt != q) {
      out.require(false, "V_T not preserved at seed " + std::to_string(seed));
      return out;
    }
    if (q == 0) {
      if (basic.edge_count() != 0) {
        out.require(false, "nonempty q=0 extraction at seed " + std::to_string(seed));
        return out;
      }
      continue;
    }
    if (basic.edge_count() < q || basic.edge_count() > 3 * static_cast<std::size_t>(q)) {
      out.require(false, "edge range violated at seed " + std::to_string(seed));
      return out;
    }
    bool edge_in_triangle = true;
    for (auto [u, v] : basic.edges())
      if (basic.count_common_neighbors(u, v) == 0) edge_in_triangle = false;
    if (!edge_in_triangle) {
      out.require(false, "edge outside triangles at seed " + std::to_string(seed));
      return out;
    }
    const QBasicDecomposition d = decompose_qbasic(basic);
    const ValidationResult valid = validate_decomposition(basic, d);
    if (!valid.ok) {
      out.require(false, "decomposition invalid at seed " + std::to_string(seed) + ": " +
                             valid.first_violation);
      return out;
    }
  }
  out.digest = std::to_string(edge_total);
  return out;
}

// ---------------------------------------------------------------- 5
Outcome criterion5() {
  Outcome out;
  CoreParams params;
  params.a = 1.0;
  params.k = 400.0;
  params.w = 0.3;
  params.C = 1.0;
  params.er = ErParams{1000, 1.0};

  const Graph k15 = complete(15, 1000);
  const SeedCertificate seed_cert = is_seed(k15, params);
  out.require(seed_cert.is_seed, "K_15 is not a seed under the pinned parameters");

  // K_15 itself is already a core: zero deletions, all conditions hold.
  const CoreCertificate fix = extract_core(k15, params);
  out.require(fix.c1 && fix.c2 && fix.c3, "fixpoint certificate incomplete");
  out.require(fix.steps.empty() && fix.drop_total == 0.0, "fixpoint deleted edges");

  // Seed strictly containing K_15: extraction strips the pendants and the
  // per-step accounting realizes E_G(T) - E_{G*}(T) < s t_n.
  Graph seeded = k15;
  for (std::uint32_t i = 0; i < 6; ++i) seeded.add_edge(i, 15 + i);
  out.require(is_seed(seeded, params).is_seed, "pendant seed rejected");
  const CoreCertificate cert = extract_core(seeded, params);
  out.require(cert.c1 && cert.c2 && cert.c3, "pendant certificate incomplete");
  out.require(cert.graph == k15, "core is not K_15");
  out.require(cert.steps.size() == 6, "unexpected deletion count");
  double drop_sum = 0.0;
  for (const auto& step : cert.steps) {
    drop_sum += step.drop;
    out.require(step.drop < params.t(), "step drop at or above t_n");
  }
  out.require(std::abs(cert.drop_total - drop_sum) <= 1e-9, "accounting mismatch");
  out.require(cert.drop_total < static_cast<double>(cert.steps.size()) * params.t(),
              "E_G - E_G* >= s t_n");
  out.require(static_cast<double>(cert.steps.size()) * params.t() <= params.w * params.k,
              "s t_n > w k");

  // Lexicographic determinism.
  const CoreCertificate again = extract_core(seeded, params);
  bool same = again.steps.size() == cert.steps.size();
  for (std::size_t i = 0; same && i < cert.steps.size(); ++i)
    same = again.steps[i].u == cert.steps[i].u && again.steps[i].v == cert.steps[i].v;
  out.require(same, "deletion order not deterministic");
  return out;
}

// ---------------------------------------------------------------- 6
Outcome criterion6() {
  Outcome out;
  const double q = 1e6;
  const EntropySolution sol = minimize_entropy(q);
  out.require(sol.constraint_residual <= 1e-9, "constraint residual " + fmt(sol.constraint_residual));
  out.require(sol.stationarity_residual <= 1e-6,
              "stationarity residual " + fmt(sol.stationarity_residual));
  out.require(sol.x1 >= 861845.0, "x1 = " + fmt(sol.x1));
  const double floor_q = q - std::pow(q, 2.0 / 3.0) * std::log(q);
  out.require(sol.value >= floor_q / 3.0 * std::log(floor_q / 3.0),
              "value below localization floor");
  return out;
}

// ---------------------------------------------------------------- 7
Outcome criterion7() {
  Outcome out;
  out.require(std::abs(ergm_exact_log_partition(3, 1.0, 1.0) - std::log(53.0 / 27.0)) < 1e-12,
              "Z != 53/27 at n=3");

  const std::uint32_t n = 6;
  const double lambda = 1.0;
  std::vector<double> log_z;
  const double mean_vt_er = er_exact_mean_vt(n, lambda);
  for (int i = 0; i <= 10; ++i) {
    const double beta = i / 10.0;
    log_z.push_back(ergm_exact_log_partition(n, lambda, beta));
    out.require(log_z.back() >= beta * std::log(static_cast<double>(n)) * mean_vt_er - 1e-12,
                "Jensen bound fails at beta=" + fmt(beta));
  }
  out.require(std::abs(log_z[0]) < 1e-12, "log Z(0) != 0");
  for (std::size_t i = 1; i < log_z.size(); ++i)
    out.require(log_z[i] >= log_z[i - 1] - 1e-12, "log Z not nondecreasing");
  for (std::size_t i = 1; i + 1 < log_z.size(); ++i)
    out.require(log_z[i + 1] - 2 * log_z[i] + log_z[i - 1] >= -1e-9, "log Z not convex");

  ErgmConfig config;
  config.n = n;
  config.lambda = lambda;
  config.beta = 0.5;
  config.steps = 10000000;
  config.burn_in = 500000;
  config.thin = 10;
  config.seed = 77;
  const ErgmTrace trace = ergm_mcmc(config);
  const double exact_mean = ergm_exact_mean_vt(n, lambda, 0.5);
  const double se = trace.stderr_vt();
  out.digest = fmt(trace.mean_vt()) + "," + fmt(se);
  out.require(std::abs(trace.mean_vt() - exact_mean) <= 3 * se,
              "mcmc mean " + fmt(trace.mean_vt()) + " vs exact " + fmt(exact_mean) +
                  " (3se=" + fmt(3 * se) + ")");
  return out;
}

// ---------------------------------------------------------------- 8
Outcome criterion8() {
  Outcome out;
  const std::vector<double> betas = {0.15, 0.55};
  const auto rows = ergm_sweep(100, 1.0, betas, 10000000, 2000000, 100, 88, true, 0.15, 4);
  std::ostringstream digest;
  for (const auto& row : rows)
    digest << fmt(row.beta) << "," << (row.init == ErgmInit::complete ? "c" : "e") << ","
           << fmt(row.mean_vt_fraction) << ";";
  out.digest = digest.str();

  for (const auto& row : rows) {
    const char* init = row.init == ErgmInit::complete ? "complete" : "empty";
    if (row.beta == 0.15)
      out.require(row.mean_vt_fraction < 0.25,
                  std::string("beta 0.15 ") + init + " mean " + fmt(row.mean_vt_fraction));
    if (row.beta == 0.55)
      out.require(row.mean_vt_fraction > 0.75,
                  std::string("beta 0.55 ") + init + " mean " + fmt(row.mean_vt_fraction));
    out.require(!row.mixing_warning, std::string("mixing warning at beta ") + fmt(row.beta));
  }
  return out;
}

// ---------------------------------------------------------------- 9
Outcome criterion9() {
  Outcome out;
  // Depth-1 census over 30 samples at n=2000: TV to Poi(2) under 0.05.
  NeighborhoodCensus depth1;
  depth1.depth = 1;
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Graph g = sample_er(ErParams{2000, 2.0}, Rng::substream(91, i).next());
    depth1.merge(neighborhood_census(g, 1));
  }
  const double tv_poisson = census_depth1_tv_to_poisson(depth1, 2.0);
  out.require(tv_poisson < 0.05, "depth-1 TV to Poi(2) = " + fmt(tv_poisson));

  // Conditional experiment: T >= 4 at n=300, 200 accepted graphs, depth 2.
  const LocalExperimentResult experiment = conditional_local_experiment(300, 2.0, 4.0, 2, 200, 92);
  out.require(experiment.tv_cond_uncond < 0.10,
              "conditioned-vs-plain TV = " + fmt(experiment.tv_cond_uncond));
  out.digest = fmt(tv_poisson) + "," + fmt(experiment.tv_cond_uncond) + "," +
               fmt(experiment.tv_cond_ugw) + "," + std::to_string(experiment.total_tries);
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
    double limit_seconds;
  };
  const std::vector<Entry> entries = {
      {1, "exhaustive correctness on 6 vertices", criterion1, 60.0},
      {2, "conditional expectation", criterion2, 600.0},
      {3, "tail oracle equivalence", criterion3, 600.0},
      {4, "q-basic pipeline", criterion4, 120.0},
      {5, "core extraction", criterion5, 600.0},
      {6, "entropy optimization", criterion6, 1.0},
      {7, "ergm exactness", criterion7, 600.0},
      {8, "phase transition", criterion8, 1200.0},
      {9, "local limit", criterion9, 900.0},
  };

  int failures = 0;
  std::vector<std::string> digests(entries.size());
  std::vector<double> runtimes(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = entries[i].fn();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    runtimes[i] = seconds;
    digests[i] = outcome.digest;
    if (seconds > entries[i].limit_seconds) {
      outcome.pass = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("runtime ") +
                        fmt(seconds) + "s exceeds " + fmt(entries[i].limit_seconds) + "s";
    }
    std::printf("criterion %d [%s]: %s (%.1fs)%s%s\n", entries[i].id, entries[i].name,
                outcome.pass ? "PASS" : "FAIL", seconds,
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }

  // Criterion 10: every stochastic criterion re-runs byte-identically.
  {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    const std::vector<std::size_t> stochastic = {1, 2, 3, 6, 7, 8};  // indices into entries
    for (std::size_t idx : stochastic) {
      const Outcome again = entries[idx].fn();
      if (again.digest != digests[idx]) {
        pass = false;
        detail += std::string("criterion ") + std::to_string(entries[idx].id) + " drifted; ";
      }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion 10 [reproducibility]: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL",
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
  }

  return failures == 0 ? 0 : 1;
}
