#include "trigraph/variational.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trigraph/conditional.hpp"
#include "trigraph/smallgraph.hpp"

namespace trigraph {

namespace {

Graph clique_in_ambient(std::uint32_t n, std::uint32_t r) {
  Graph g(n);
  for (std::uint32_t u = 0; u < r; ++u)
    for (std::uint32_t v = u + 1; v < r; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

PhiResult clique_upper_bound(const PhiQuery& q) {
  if (!q.valid()) throw std::invalid_argument("clique_upper_bound: invalid query");
  PhiResult result;
  result.method = PhiMethod::clique_upper;
  const double mass = 6.0 * q.a * (1.0 + q.w) * q.k;
  result.value = 0.5 * std::pow(mass, 2.0 / 3.0) * std::log(1.0 / q.p);

  const ErParams er{q.n, q.p * q.n};
  std::uint32_t r = static_cast<std::uint32_t>(std::ceil(std::cbrt(mass)));
  if (r < 1) r = 1;
  for (; r <= q.n; ++r) {
    Graph clique = clique_in_ambient(q.n, r);
    if (expected_triangles_conditional(clique, er) >= q.a * q.k) {
      result.witness_edges = clique.edge_count();
      result.witness = std::move(clique);
      return result;
    }
  }
  result.witness_flagged = true;  // no clique in K_n reaches a*k
  return result;
}

PhiResult edge_lower_bound(const PhiQuery& q) {
  if (!q.valid()) throw std::invalid_argument("edge_lower_bound: invalid query");
  PhiResult result;
  result.method = PhiMethod::edge_lower;
  const double shrunk = 1.0 - q.w;
  result.value = shrunk <= 0.0
                     ? 0.0
                     : 0.5 * std::pow(6.0 * q.a * shrunk * q.k, 2.0 / 3.0) * std::log(1.0 / q.p);
  return result;
}

PhiResult phi_exact(const PhiQuery& q, std::uint32_t cap) {
  if (!q.valid()) throw std::invalid_argument("phi_exact: invalid query");
  if (q.n > cap) throw std::invalid_argument("phi_exact: n exceeds enumeration cap");
  const SmallGraphSpace space(q.n);
  const double target = q.a * q.k;
  const double log1p = std::log(1.0 / q.p);

  PhiResult result;
  result.method = PhiMethod::exact;

  // Profile pieces depend on (edges, cherries, triangles) only, all cheap
  // to read off a mask.
  const double n = q.n;
  auto expected = [&](std::uint32_t mask) {
    double e = 0, cherries = 0, tri = 0;
    std::array<int, 8> deg{};
    for (std::uint32_t u = 0; u < q.n; ++u)
      for (std::uint32_t v = u + 1; v < q.n; ++v)
        if (mask & (1U << space.edge_index[u][v])) {
          e += 1;
          ++deg[u];
          ++deg[v];
        }
    for (std::uint32_t u = 0; u < q.n; ++u) cherries += deg[u] * (deg[u] - 1) / 2.0;
    tri = space.triangles(mask);
    const double a3 = tri;
    const double a2 = cherries - 3 * tri;
    const double a1 = e * (n - 2) - 2 * cherries + 3 * tri;
    const double a0 = n * (n - 1) * (n - 2) / 6.0 - a1 - a2 - a3;
    return a3 + a2 * q.p + a1 * q.p * q.p + a0 * q.p * q.p * q.p;
  };

  // Strata by edge count, ascending; first feasible level is optimal and
  // the first feasible mask inside it is the witness.
  for (std::uint32_t m = 0; m <= space.edge_bits; ++m) {
    std::uint32_t mask = (m == 0) ? 0 : (1U << m) - 1;
    while (true) {
      if (expected(mask) >= target) {
        result.value = m * log1p;
        result.witness = space.to_graph(mask);
        result.witness_edges = m;
        return result;
      }
      if (m == 0) break;
      // Gosper's hack: next mask with the same popcount.
      std::uint32_t c = mask & -mask;
      std::uint32_t r = mask + c;
      std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
      if (next >= (1U << space.edge_bits)) break;
      mask = next;
    }
  }
  result.feasible = false;
  result.value = std::numeric_limits<double>::infinity();
  return result;
}

CorrectionTerms correction_terms(std::uint32_t n, double p, double k, double a, double w,
                                 double C, double Cprime, double m) {
  if (w <= 0) throw std::invalid_argument("correction_terms: w must be positive");
  if (C <= 0 || Cprime <= 0) throw std::invalid_argument("correction_terms: constants must be positive");
  if (!(p > 0 && p < 1) || k < 1 || a <= 0 || n == 0)
    throw std::invalid_argument("correction_terms: invalid parameters");
  const double log1p = std::log(1.0 / p);
  CorrectionTerms terms;
  terms.t_n = w * w * std::cbrt(k) / (C * a * log1p);
  terms.m = m > 0 ? m : C * a / w * std::pow(k, 2.0 / 3.0) * log1p;
  terms.psi_n = Cprime * std::log(static_cast<double>(n)) / (w * w * std::cbrt(k)) +
                std::log(Cprime * std::pow(w, -5.0) * log1p * log1p * log1p) / log1p;
  terms.log_xi_n =
      (0.5 * std::pow(6.0 * a, 2.0 / 3.0) - C / 3.0) * std::pow(k, 2.0 / 3.0) * log1p;
  terms.xi_n = std::exp(terms.log_xi_n);
  terms.big_psi_n =
      (Cprime / terms.t_n * std::log(static_cast<double>(n)) +
       std::log(Cprime * terms.m / (terms.t_n * terms.t_n))) /
      log1p;
  terms.eps_n = std::pow(k, -2.0 / 3.0);
  return terms;
}

double rate_triangles(double k, double p) {
  if (k < 1 || !(p > 0 && p < 1)) throw std::invalid_argument("rate_triangles: bad arguments");
  return 0.5 * std::pow(6.0 * k, 2.0 / 3.0) * std::log(1.0 / p);
}

double rate_vt(double k) {
  if (k < 1) throw std::invalid_argument("rate_vt: k must be >= 1");
  return k / 3.0 * std::log(k / 3.0);
}

}  // namespace trigraph
