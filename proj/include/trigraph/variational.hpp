#pragma once

#include <cstdint>
#include <optional>

#include "trigraph/graph.hpp"

namespace trigraph {

// Query for Phi_{n,p,k}(a): the minimum of e_G log(1/p) over planted
// graphs G in K_n with E_G(T) >= a*k. w is the perturbation knob the
// closed-form bounds are stated with.
struct PhiQuery {
  std::uint32_t n = 0;
  double p = 0.0;
  double k = 1.0;
  double a = 1.0;
  double w = 0.0;

  bool valid() const { return n > 0 && p > 0.0 && p < 1.0 && k >= 1.0 && a > 0.0 && w >= 0.0; }
};

enum class PhiMethod { exact, clique_upper, edge_lower };

struct PhiResult {
  double value = 0.0;  // natural-log units
  PhiMethod method = PhiMethod::exact;
  bool feasible = true;               // exact search found a feasible graph
  std::optional<Graph> witness;       // absent for edge_lower / missing clique
  bool witness_flagged = false;       // clique witness did not fit in n
  std::size_t witness_edges = 0;
};

// 1/2 (6a(1+w)k)^{2/3} log(1/p); witness = smallest clique K_r with
// r >= ceil((6a(1+w)k)^{1/3}) whose E_{K_r}(T) >= a k, when it fits in n.
PhiResult clique_upper_bound(const PhiQuery& q);

// 1/2 (6a(1-w)k)^{2/3} log(1/p); clamped to 0 for w >= 1.
PhiResult edge_lower_bound(const PhiQuery& q);

// Exact minimum by enumerating edge subsets of K_n in increasing edge
// count, stopping at the first feasible level. n is capped (default 6).
PhiResult phi_exact(const PhiQuery& q, std::uint32_t cap = 6);

// Correction terms the tail theorems are stated with. C and C' are the
// free constants of the bounds, exposed as parameters; m is the core edge count
// Psi_n is evaluated at (defaults to the (S2) edge budget).
struct CorrectionTerms {
  double psi_n = 0.0;
  double xi_n = 0.0;      // may overflow to inf; log_xi_n is always finite
  double log_xi_n = 0.0;
  double big_psi_n = 0.0;  // Psi_n at the chosen m
  double t_n = 0.0;
  double eps_n = 0.0;
  double m = 0.0;
};

CorrectionTerms correction_terms(std::uint32_t n, double p, double k, double a, double w,
                                 double C, double Cprime = 6.0, double m = -1.0);

// 1/2 (6k)^{2/3} log(1/p), the triangle-tail rate.
double rate_triangles(double k, double p);

// (k/3) log(k/3), the vertices-in-triangles rate.
double rate_vt(double k);

}  // namespace trigraph
