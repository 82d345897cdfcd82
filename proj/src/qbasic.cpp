#include "trigraph/qbasic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace trigraph {

std::pair<std::uint32_t, std::uint32_t> qbasic_violation(const Graph& g) {
  Graph work = g;
  TriangleStats stats = triangle_stats(work);
  const std::uint32_t q = stats.vt;
  for (auto [u, v] : g.edges()) {
    toggle_edge(work, stats, u, v);
    const bool preserved = stats.vt == q;
    toggle_edge(work, stats, u, v);
    if (preserved) return {u, v};
  }
  const std::uint32_t n = g.vertex_count();
  return {n, n};
}

bool is_qbasic(const Graph& g) {
  auto [u, v] = qbasic_violation(g);
  return u == g.vertex_count() && v == g.vertex_count();
}

Graph extract_qbasic(const Graph& g) {
  Graph work = g;
  TriangleStats stats = triangle_stats(work);
  const std::uint32_t q = stats.vt;
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (auto [u, v] : work.edges()) {
      toggle_edge(work, stats, u, v);
      if (stats.vt == q) {
        deleted = true;
        break;  // deletion kept, restart scan
      }
      toggle_edge(work, stats, u, v);
    }
  }
  return work;
}

namespace {

// Lexicographically smallest triangle with all vertices free, if any.
bool first_free_triangle(const Graph& g, const std::vector<bool>& used,
                         std::array<std::uint32_t, 3>& out) {
  const std::uint32_t n = g.vertex_count();
  for (std::uint32_t u = 0; u < n; ++u) {
    if (used[u]) continue;
    for (std::uint32_t v : g.neighbors(u)) {
      if (v <= u || used[v]) continue;
      bool found = false;
      g.for_common_neighbors(u, v, [&](std::uint32_t w) {
        if (!found && w > v && !used[w]) {
          out = {u, v, w};
          found = true;
        }
      });
      if (found) return true;
    }
  }
  return false;
}

}  // namespace

QBasicDecomposition decompose_qbasic(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.count_common_neighbors(u, v) == 0) throw QBasicPreconditionError(u, v);
  }
  const std::uint32_t n = g.vertex_count();
  QBasicDecomposition d;
  std::vector<bool> in_v1(n, false), used(n, false);

  // Phase 1: vertex-disjoint triangles, lexicographic order.
  std::array<std::uint32_t, 3> tri;
  while (first_free_triangle(g, used, tri)) {
    d.triangles1.push_back(tri);
    for (std::uint32_t x : tri) {
      used[x] = true;
      in_v1[x] = true;
      d.v1.push_back(x);
    }
  }

  // Phase 2: vertex-disjoint edges outside V1, lexicographic order.
  std::vector<bool> in_v2(n, false);
  for (std::uint32_t u = 0; u < n; ++u) {
    if (used[u]) continue;
    for (std::uint32_t v : g.neighbors(u)) {
      if (v <= u || used[v]) continue;
      d.matching2.push_back({u, v});
      used[u] = used[v] = true;
      in_v2[u] = in_v2[v] = true;
      d.v2.push_back(u);
      d.v2.push_back(v);
      break;
    }
  }

  // Co-neighbor witnesses: smallest vertex of V1 adjacent to both ends.
  for (const auto& edge : d.matching2) {
    std::uint32_t witness = n;
    g.for_common_neighbors(edge[0], edge[1], [&](std::uint32_t w) {
      if (witness == n && in_v1[w]) witness = w;
    });
    if (witness == n)
      throw std::logic_error("decompose_qbasic: matched edge without co-neighbor in V1");
    d.coneighbor2.push_back(witness);
  }

  // V3: leftover covered vertices; witness edge inside V1 or between V1
  // and V2, both endpoints adjacent to the vertex.
  for (std::uint32_t v = 0; v < n; ++v) {
    if (used[v] || g.degree(v) == 0) continue;
    d.v3.push_back(v);
    std::array<std::uint32_t, 2> witness = {n, n};
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size() && witness[0] == n; ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const std::uint32_t x = nbrs[i], y = nbrs[j];
        if (!g.has_edge(x, y)) continue;
        const bool ok = (in_v1[x] && in_v1[y]) || (in_v1[x] && in_v2[y]) ||
                        (in_v2[x] && in_v1[y]);
        if (ok) {
          witness = {x, y};
          break;
        }
      }
    }
    if (witness[0] == n)
      throw std::logic_error("decompose_qbasic: V3 vertex without witness edge");
    d.witness3.push_back(witness);
  }
  return d;
}

ValidationResult validate_decomposition(const Graph& g, const QBasicDecomposition& d) {
  auto fail = [](const std::string& why) { return ValidationResult{false, why}; };
  const std::uint32_t n = g.vertex_count();

  std::vector<int> part(n, 0);  // 0 = unassigned, 1..3 = V1..V3
  auto assign = [&](const std::vector<std::uint32_t>& vs, int label) {
    for (std::uint32_t v : vs) {
      if (v >= n || part[v] != 0) return false;
      part[v] = label;
    }
    return true;
  };
  if (!assign(d.v1, 1)) return fail("v1 not disjoint or out of range");
  if (!assign(d.v2, 2)) return fail("v2 overlaps v1 or out of range");
  if (!assign(d.v3, 3)) return fail("v3 overlaps v1/v2 or out of range");
  for (std::uint32_t v = 0; v < n; ++v) {
    const bool covered = g.degree(v) > 0;
    if (covered && part[v] == 0) return fail("covered vertex missing from partition");
    if (!covered && part[v] != 0) return fail("isolated vertex assigned to a part");
  }
  if (d.v1.size() % 3 != 0) return fail("|v1| not divisible by 3");
  if (d.v2.size() % 2 != 0) return fail("|v2| not even");

  // triangles1 partitions v1 into triangles of g.
  if (d.triangles1.size() * 3 != d.v1.size()) return fail("triangles1 does not cover v1");
  std::vector<bool> seen(n, false);
  for (const auto& t : d.triangles1) {
    for (std::uint32_t x : t) {
      if (x >= n || part[x] != 1 || seen[x]) return fail("triangles1 vertex invalid or reused");
      seen[x] = true;
    }
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2]))
      return fail("triangles1 entry is not a triangle of g");
  }

  // matching2 partitions v2 into edges of g, with co-neighbors in v1.
  if (d.matching2.size() * 2 != d.v2.size()) return fail("matching2 does not cover v2");
  if (d.coneighbor2.size() != d.matching2.size()) return fail("coneighbor2 size mismatch");
  for (std::size_t i = 0; i < d.matching2.size(); ++i) {
    const auto& e = d.matching2[i];
    for (std::uint32_t x : e) {
      if (x >= n || part[x] != 2 || seen[x]) return fail("matching2 vertex invalid or reused");
      seen[x] = true;
    }
    if (!g.has_edge(e[0], e[1])) return fail("matching2 entry is not an edge of g");
    const std::uint32_t w = d.coneighbor2[i];
    if (w >= n || part[w] != 1) return fail("co-neighbor not in v1");
    if (!g.has_edge(w, e[0]) || !g.has_edge(w, e[1]))
      return fail("co-neighbor not adjacent to both endpoints");
  }

  // No triangle outside V1.
  {
    const std::uint32_t nn = g.vertex_count();
    for (std::uint32_t u = 0; u < nn; ++u) {
      if (part[u] == 1) continue;
      for (std::uint32_t v : g.neighbors(u)) {
        if (v <= u || part[v] == 1) continue;
        bool bad = false;
        g.for_common_neighbors(u, v, [&](std::uint32_t w) {
          if (part[w] != 1) bad = true;
        });
        if (bad) return fail("triangle outside v1");
      }
    }
  }

  // v3 independent, with valid witness edges.
  if (d.witness3.size() != d.v3.size()) return fail("witness3 size mismatch");
  for (std::size_t i = 0; i < d.v3.size(); ++i) {
    const std::uint32_t v = d.v3[i];
    for (std::uint32_t u : g.neighbors(v))
      if (part[u] == 3) return fail("edge inside v3");
    const auto& e = d.witness3[i];
    if (e[0] >= n || e[1] >= n) return fail("witness3 edge out of range");
    if (!g.has_edge(e[0], e[1])) return fail("witness3 entry is not an edge of g");
    const bool placement = (part[e[0]] == 1 && part[e[1]] == 1) ||
                           (part[e[0]] == 1 && part[e[1]] == 2) ||
                           (part[e[0]] == 2 && part[e[1]] == 1);
    if (!placement) return fail("witness3 edge not inside v1 or between v1 and v2");
    if (!g.has_edge(v, e[0]) || !g.has_edge(v, e[1]))
      return fail("witness3 endpoints not both adjacent to the v3 vertex");
  }
  return {};
}

ConfigurationCountBound configuration_count_bound(std::uint64_t n, std::uint64_t l1,
                                                  std::uint64_t l2, std::uint64_t l3) {
  if (l1 % 3 != 0) throw std::invalid_argument("configuration_count_bound: l1 must be divisible by 3");
  if (l2 % 2 != 0) throw std::invalid_argument("configuration_count_bound: l2 must be even");
  if (n == 0) throw std::invalid_argument("configuration_count_bound: n must be positive");
  ConfigurationCountBound result;
  const double q = static_cast<double>(l1 + l2 + l3);
  if (l1 == 0 && l2 > 0) {
    // l1^{l2/2} = 0: no V1 vertex can host the co-neighbors.
    result.log_count = -std::numeric_limits<double>::infinity();
    result.degenerate = true;
    return result;
  }
  double log_count = q * std::log(static_cast<double>(n));
  log_count -= (l1 / 3.0) * std::log(6.0) + std::lgamma(l1 / 3.0 + 1.0);
  log_count -= (l2 / 2.0) * std::log(2.0) + std::lgamma(l2 / 2.0 + 1.0);
  log_count -= std::lgamma(static_cast<double>(l3) + 1.0);
  if (l2 > 0) log_count += (l2 / 2.0) * std::log(static_cast<double>(l1));
  if (l3 > 0) log_count += static_cast<double>(l3) * std::log(3.0 * q);
  result.log_count = log_count;
  return result;
}

double qbasic_edge_count_bound(std::uint64_t n, std::uint64_t q, std::uint64_t m) {
  if (!(q <= m && m <= 3 * q)) throw std::invalid_argument("qbasic_edge_count_bound: need q <= m <= 3q");
  if (n == 0 || q == 0) throw std::invalid_argument("qbasic_edge_count_bound: n, q must be positive");
  const double qd = static_cast<double>(q);
  return 3.0 * std::log(3.0 * qd) + static_cast<double>(m) * std::log(static_cast<double>(n)) -
         qd / 3.0 * std::log(qd / 3.0) + 16.0 * qd;
}

EntropySolution minimize_entropy(double q) {
  if (q < 3) throw std::invalid_argument("minimize_entropy: q must be >= 3");
  // x1 + x2 + x3 = 3 e^{3mu-1} (1 + (2/3) e^{-mu} + (1/3) e^{-2mu}), strictly
  // increasing in mu.
  auto total = [](double mu) {
    return 3.0 * std::exp(3.0 * mu - 1.0) *
           (1.0 + 2.0 / 3.0 * std::exp(-mu) + 1.0 / 3.0 * std::exp(-2.0 * mu));
  };
  double lo = 0.0, hi = 1.0;
  while (total(lo) > q) lo -= 1.0;
  while (total(hi) < q) hi += 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) < q ? lo : hi) = mid;
  }
  EntropySolution sol;
  sol.mu = 0.5 * (lo + hi);
  sol.x1 = 3.0 * std::exp(3.0 * sol.mu - 1.0);
  sol.x2 = 2.0 * std::exp(2.0 * sol.mu - 1.0);
  sol.x3 = std::exp(sol.mu - 1.0);
  sol.value = (sol.x1 / 3.0) * std::log(sol.x1 / 3.0) + (sol.x2 / 2.0) * std::log(sol.x2 / 2.0) +
              sol.x3 * std::log(sol.x3);
  sol.constraint_residual = std::abs(sol.x1 + sol.x2 + sol.x3 - q) / q;
  const double g1 = std::log(sol.x1 / 3.0) / 3.0 + 1.0 / 3.0 - sol.mu;
  const double g2 = std::log(sol.x2 / 2.0) / 2.0 + 0.5 - sol.mu;
  const double g3 = std::log(sol.x3) + 1.0 - sol.mu;
  sol.stationarity_residual = std::max({std::abs(g1), std::abs(g2), std::abs(g3)});
  if (q >= kEntropyLocalizationFloor) {
    sol.localization_checked = true;
    const double floor_x1 = q - std::pow(q, 2.0 / 3.0) * std::log(q);
    sol.localization_ok = sol.x1 >= floor_x1 && sol.x1 <= q;
  }
  return sol;
}

}  // namespace trigraph
