#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

// Parameters of the seed/core machinery. C is a free constant of the bounds.
struct CoreParams {
  double a = 1.0;
  double k = 1.0;
  double w = 0.1;
  double C = 6.0;
  ErParams er;

  double log_inv_p() const;
  // t_n = w^2 k^{1/3} / (C a log(1/p)), the (C3) edge-drop floor.
  double t() const;
  // C a w^{-1} k^{2/3} log(1/p), the (S2)/(C2) edge budget.
  double edge_budget() const;
  bool valid() const;
};

struct SeedCertificate {
  bool s1 = false;  // E_G(T) >= (a-w)k
  bool s2 = false;  // e_G within the edge budget
  bool is_seed = false;
  double expected_triangles = 0.0;
  double s1_threshold = 0.0;
  std::size_t edges = 0;
  double edge_budget = 0.0;
};

struct CoreStep {
  std::uint32_t u = 0, v = 0;
  double drop = 0.0;
};

struct CoreCertificate {
  Graph graph;
  bool c1 = false;  // E >= (a-2w)k
  bool c2 = false;  // edges within budget
  bool c3 = false;  // every remaining edge drops E by >= t_n
  double expected_triangles = 0.0;
  double c1_threshold = 0.0;
  std::size_t edges = 0;
  double edge_budget = 0.0;
  double min_edge_drop = 0.0;  // +inf convention when edgeless
  double t_n = 0.0;
  std::vector<CoreStep> steps;  // deletion trail, lexicographic tie-break
  double drop_total = 0.0;      // E_input - E_core
};

SeedCertificate is_seed(const Graph& g, const CoreParams& params);

// Deletes the lexicographically smallest edge whose E(T)-drop is below
// t_n, until none is left. (C3) holds by construction; if the input was a
// seed, (C1) and (C2) hold too.
CoreCertificate extract_core(const Graph& g, const CoreParams& params);

// log of the m-core count bound (1/p)^{m Psi_n}; p-free since the
// log(1/p) factors cancel. lambda enters the regime guard t_n > lambda +
// lambda^2 from the proof.
struct CoreCountBound {
  double log_count = 0.0;
  bool valid_regime = true;
  bool clamped = false;  // negative bound clamped to 0
};
CoreCountBound core_count_bound(double m, std::uint32_t n, double t_n, double Cprime,
                                double lambda);

// (1 - w/a)^ell together with xi_n from the same lemma.
struct SeedFailureBound {
  double bound = 0.0;
  double log_bound = 0.0;
  double xi_n = 0.0;
  double log_xi_n = 0.0;
  double ell_max = 0.0;
};
SeedFailureBound seed_failure_bound(double a, double w, double k, double p, double C, double ell);

// (delta, m)-clique test: minimum degree over covered vertices against
// (1 - 4 delta^{1/2}) (2 e_G)^{1/2}.
struct NearCliqueReport {
  double delta = 0.0;
  std::size_t m = 0;
  std::size_t min_degree = 0;
  double threshold = 0.0;
  bool passes = false;
};
NearCliqueReport near_clique_check(const Graph& g, double delta);

// Greedy minimum-degree peeling against the threshold computed from the
// ORIGINAL edge count. Empty terminal state means no subgraph found.
struct PeelReport {
  std::optional<Graph> subgraph;  // same vertex labels, non-survivors isolated
  std::vector<std::uint32_t> survivors;
  double threshold = 0.0;
  bool regime_ok = false;  // delta >= e_G^{-1/2}
  std::size_t removed = 0;
};
PeelReport high_min_degree_subgraph(const Graph& g, double delta);

}  // namespace trigraph
