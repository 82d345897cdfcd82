#include "trigraph/cores.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "trigraph/conditional.hpp"

namespace trigraph {

double CoreParams::log_inv_p() const { return std::log(1.0 / er.p()); }

double CoreParams::t() const { return w * w * std::cbrt(k) / (C * a * log_inv_p()); }

double CoreParams::edge_budget() const {
  return C * a / w * std::pow(k, 2.0 / 3.0) * log_inv_p();
}

bool CoreParams::valid() const {
  return a > 0 && k >= 1 && w > 0 && C > 0 && er.n > 0 && er.p() > 0 && er.p() < 1;
}

SeedCertificate is_seed(const Graph& g, const CoreParams& params) {
  if (!params.valid()) throw std::invalid_argument("is_seed: invalid parameters");
  SeedCertificate cert;
  cert.expected_triangles = expected_triangles_conditional(g, params.er);
  cert.s1_threshold = (params.a - params.w) * params.k;
  cert.edges = g.edge_count();
  cert.edge_budget = params.edge_budget();
  cert.s1 = cert.expected_triangles >= cert.s1_threshold;
  cert.s2 = static_cast<double>(cert.edges) <= cert.edge_budget;
  cert.is_seed = cert.s1 && cert.s2;
  return cert;
}

CoreCertificate extract_core(const Graph& g, const CoreParams& params) {
  if (!params.valid()) throw std::invalid_argument("extract_core: invalid parameters");
  CoreCertificate cert;
  cert.graph = g;
  cert.t_n = params.t();
  const double e_before = expected_triangles_conditional(g, params.er);

  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (auto [u, v] : cert.graph.edges()) {
      const double drop = edge_drop(cert.graph, params.er, u, v);
      if (drop < cert.t_n) {
        cert.graph.remove_edge(u, v);
        cert.steps.push_back({u, v, drop});
        deleted = true;
        break;  // restart the lexicographic scan
      }
    }
  }

  cert.expected_triangles = expected_triangles_conditional(cert.graph, params.er);
  cert.drop_total = e_before - cert.expected_triangles;
  cert.c1_threshold = (params.a - 2 * params.w) * params.k;
  cert.edges = cert.graph.edge_count();
  cert.edge_budget = params.edge_budget();
  cert.min_edge_drop = std::numeric_limits<double>::infinity();
  for (auto [u, v] : cert.graph.edges())
    cert.min_edge_drop = std::min(cert.min_edge_drop, edge_drop(cert.graph, params.er, u, v));
  cert.c1 = cert.expected_triangles >= cert.c1_threshold;
  cert.c2 = static_cast<double>(cert.edges) <= cert.edge_budget;
  cert.c3 = cert.min_edge_drop >= cert.t_n;  // vacuously true when edgeless
  return cert;
}

CoreCountBound core_count_bound(double m, std::uint32_t n, double t_n, double Cprime,
                                double lambda) {
  if (m <= 0 || n == 0 || t_n <= 0 || Cprime <= 0)
    throw std::invalid_argument("core_count_bound: bad arguments");
  CoreCountBound bound;
  // Proof needs vertices of degree >= t_n - (lambda + lambda^2) in the core.
  bound.valid_regime = t_n > lambda + lambda * lambda;
  bound.log_count =
      m * (Cprime / t_n * std::log(static_cast<double>(n)) + std::log(Cprime * m / (t_n * t_n)));
  if (bound.log_count < 0) {
    bound.log_count = 0;
    bound.clamped = true;
  }
  return bound;
}

SeedFailureBound seed_failure_bound(double a, double w, double k, double p, double C,
                                    double ell) {
  if (!(w > 0 && w < a)) throw std::invalid_argument("seed_failure_bound: need 0 < w < a");
  if (!(p > 0 && p < 1) || k < 1 || C <= 0)
    throw std::invalid_argument("seed_failure_bound: bad arguments");
  SeedFailureBound result;
  result.ell_max = C * a / 3.0 / w * std::pow(k, 2.0 / 3.0) * std::log(1.0 / p);
  if (ell < 0 || ell > result.ell_max)
    throw std::invalid_argument("seed_failure_bound: ell out of admissible range");
  result.log_bound = ell * std::log1p(-w / a);
  result.bound = std::exp(result.log_bound);
  result.log_xi_n =
      (0.5 * std::pow(6.0 * a, 2.0 / 3.0) - C / 3.0) * std::pow(k, 2.0 / 3.0) * std::log(1.0 / p);
  result.xi_n = std::exp(result.log_xi_n);
  return result;
}

NearCliqueReport near_clique_check(const Graph& g, double delta) {
  if (delta <= 0) throw std::invalid_argument("near_clique_check: delta must be positive");
  NearCliqueReport report;
  report.delta = delta;
  report.m = g.edge_count();
  report.threshold =
      (1.0 - 4.0 * std::sqrt(delta)) * std::sqrt(2.0 * static_cast<double>(report.m));
  std::size_t min_deg = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) min_deg = std::min(min_deg, g.degree(v));
  report.min_degree = (report.m == 0) ? 0 : min_deg;
  report.passes = static_cast<double>(report.min_degree) >= report.threshold;
  return report;
}

PeelReport high_min_degree_subgraph(const Graph& g, double delta) {
  if (delta <= 0) throw std::invalid_argument("high_min_degree_subgraph: delta must be positive");
  PeelReport report;
  const double e0 = static_cast<double>(g.edge_count());
  report.threshold = (1.0 - 4.0 * std::sqrt(delta)) * std::sqrt(2.0 * e0);
  report.regime_ok = e0 > 0 && delta >= 1.0 / std::sqrt(e0);

  Graph work = g;
  const std::uint32_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::size_t alive_count = n;
  while (alive_count > 0) {
    std::uint32_t argmin = 0;
    std::size_t min_deg = std::numeric_limits<std::size_t>::max();
    for (std::uint32_t v = 0; v < n; ++v)
      if (alive[v] && work.degree(v) < min_deg) {
        min_deg = work.degree(v);
        argmin = v;
      }
    if (static_cast<double>(min_deg) >= report.threshold) break;
    // Remove the smallest-index minimum-degree vertex.
    auto nbrs = work.neighbors(argmin);
    for (std::uint32_t u : nbrs) work.remove_edge(argmin, u);
    alive[argmin] = false;
    --alive_count;
    ++report.removed;
  }
  if (alive_count == 0) return report;
  for (std::uint32_t v = 0; v < n; ++v)
    if (alive[v]) report.survivors.push_back(v);
  report.subgraph = std::move(work);
  return report;
}

}  // namespace trigraph
