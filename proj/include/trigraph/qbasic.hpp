#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

// A graph is q-basic when V_T = q and deleting any edge strictly lowers
// V_T. Every edge of such a graph lies in a triangle.
bool is_qbasic(const Graph& g);

// First edge (lexicographic) whose deletion keeps V_T, or {n,n} if none.
std::pair<std::uint32_t, std::uint32_t> qbasic_violation(const Graph& g);

// Deletes V_T-preserving edges (lexicographically smallest first) until
// none is left. Preserves V_T exactly; the result is q-basic.
Graph extract_qbasic(const Graph& g);

// The V1/V2/V3 decomposition with machine-checkable witnesses:
//   - triangles1: vertex-disjoint triangles covering v1
//   - matching2: vertex-disjoint edges covering v2, each with a
//     co-neighbor witness in v1
//   - v3: independent set; per vertex a witness edge (inside v1 or
//     between v1 and v2) whose endpoints are both its neighbors
struct QBasicDecomposition {
  std::vector<std::uint32_t> v1, v2, v3;
  std::vector<std::array<std::uint32_t, 3>> triangles1;
  std::vector<std::array<std::uint32_t, 2>> matching2;
  std::vector<std::uint32_t> coneighbor2;                // parallel to matching2
  std::vector<std::array<std::uint32_t, 2>> witness3;    // parallel to v3
};

// Requires every edge of g to lie in a triangle (holds for q-basic
// graphs; throws QBasicPreconditionError carrying the violating edge
// otherwise). Greedy phases use lexicographic order throughout.
struct QBasicPreconditionError : std::runtime_error {
  QBasicPreconditionError(std::uint32_t u_, std::uint32_t v_)
      : std::runtime_error("edge {" + std::to_string(u_) + "," + std::to_string(v_) +
                           "} lies in no triangle"),
        u(u_), v(v_) {}
  std::uint32_t u, v;
};
QBasicDecomposition decompose_qbasic(const Graph& g);

// Re-checks every decomposition property against the graph, independent
// of how the decomposition was produced.
struct ValidationResult {
  bool ok = true;
  std::string first_violation;
};
ValidationResult validate_decomposition(const Graph& g, const QBasicDecomposition& d);

// log of n^q / (3!^{l1/3} (l1/3)! 2!^{l2/2} (l2/2)! l3!) * l1^{l2/2} * (3q)^{l3}.
// Returns -inf (flagged) for the degenerate l1 = 0 < l2 case.
struct ConfigurationCountBound {
  double log_count = 0.0;
  bool degenerate = false;
};
ConfigurationCountBound configuration_count_bound(std::uint64_t n, std::uint64_t l1,
                                                  std::uint64_t l2, std::uint64_t l3);

// log C + 3 log(3q) + m log n - (q/3) log(q/3) + 16 q, with the free
// constant C taken as 1.
double qbasic_edge_count_bound(std::uint64_t n, std::uint64_t q, std::uint64_t m);

// Minimum of f(x1,x2,x3) = (x1/3)log(x1/3) + (x2/2)log(x2/2) + x3 log x3
// over x1+x2+x3 = q, solved by bisection on the Lagrange multiplier.
struct EntropySolution {
  double mu = 0.0;
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
  double value = 0.0;
  double constraint_residual = 0.0;    // |x1+x2+x3-q| / q
  double stationarity_residual = 0.0;  // max |grad component|
  bool localization_checked = false;   // q - q^{2/3} log q <= x1 <= q verified
  bool localization_ok = false;
};
EntropySolution minimize_entropy(double q);

// Validity floor below which the localization inequality is not asserted.
inline constexpr double kEntropyLocalizationFloor = 1e5;

}  // namespace trigraph
