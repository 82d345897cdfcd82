#include "trigraph/graph.hpp"

#include <cmath>
#include <stdexcept>

#include "trigraph/rng.hpp"

namespace trigraph {

Graph sample_er_p(std::uint32_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_er_p: p must be in [0,1]");
  Graph g(n);
  if (n < 2 || p == 0.0) return g;
  if (p == 1.0) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  Rng rng(seed);
  // Geometric skipping over the C(n,2) pairs in lexicographic order.
  const std::uint64_t m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const double log1mp = std::log1p(-p);
  std::uint64_t idx = 0;
  while (idx < m) {
    double skip = std::floor(std::log1p(-rng.uniform01()) / log1mp);
    if (skip >= static_cast<double>(m - idx)) break;
    idx += static_cast<std::uint64_t>(skip);
    // Invert the lexicographic pair index: row a holds n-1-a pairs.
    std::uint64_t remaining = idx;
    std::uint32_t a = 0;
    while (remaining >= n - 1 - a) {
      remaining -= n - 1 - a;
      ++a;
    }
    g.add_edge(a, a + 1 + static_cast<std::uint32_t>(remaining));
    ++idx;
  }
  return g;
}

Graph sample_er(const ErParams& params, std::uint64_t seed) {
  if (params.n == 0) return Graph(0);
  if (params.lambda < 0.0 || params.lambda >= static_cast<double>(params.n))
    throw std::invalid_argument("sample_er: need 0 <= lambda < n");
  return sample_er_p(params.n, params.p(), seed);
}

TriangleStats triangle_stats(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  TriangleStats stats;
  stats.per_vertex.assign(n, 0);
  // Each edge {u,v} with u<v closes one triangle per common neighbor w;
  // restricting to w > v counts every triangle exactly once.
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v : g.neighbors(u)) {
      if (v <= u) continue;
      g.for_common_neighbors(u, v, [&](std::uint32_t w) {
        if (w > v) {
          ++stats.total;
          ++stats.per_vertex[u];
          ++stats.per_vertex[v];
          ++stats.per_vertex[w];
        }
      });
    }
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (stats.per_vertex[v] > 0) ++stats.vt;
  return stats;
}

SubgraphCounts subgraph_counts(const Graph& g) {
  SubgraphCounts counts;
  counts.edges = g.edge_count();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t d = g.degree(v);
    counts.cherries += d * (d - 1) / 2;
  }
  counts.triangles = triangle_stats(g).total;
  return counts;
}

std::pair<std::int64_t, int> toggle_preview(const Graph& g, const TriangleStats& stats,
                                            std::uint32_t u, std::uint32_t v) {
  const bool removing = g.has_edge(u, v);
  std::int64_t dt = 0;
  int dvt = 0;
  std::size_t t = g.for_common_neighbors(u, v, [&](std::uint32_t w) {
    if (removing) {
      if (stats.per_vertex[w] == 1) --dvt;
    } else {
      if (stats.per_vertex[w] == 0) ++dvt;
    }
  });
  if (t == 0) return {0, 0};
  if (removing) {
    dt = -static_cast<std::int64_t>(t);
    if (stats.per_vertex[u] == t) --dvt;
    if (stats.per_vertex[v] == t) --dvt;
  } else {
    dt = static_cast<std::int64_t>(t);
    if (stats.per_vertex[u] == 0) ++dvt;
    if (stats.per_vertex[v] == 0) ++dvt;
  }
  return {dt, dvt};
}

int toggle_edge(Graph& g, TriangleStats& stats, std::uint32_t u, std::uint32_t v) {
  if (u == v || u >= g.vertex_count() || v >= g.vertex_count())
    throw std::invalid_argument("toggle_edge: bad vertex pair");
  const bool removing = g.has_edge(u, v);
  int dvt = 0;
  std::size_t t = g.for_common_neighbors(u, v, [&](std::uint32_t w) {
    if (removing) {
      if (--stats.per_vertex[w] == 0) --dvt;
    } else {
      if (stats.per_vertex[w]++ == 0) ++dvt;
    }
  });
  if (removing) {
    g.remove_edge(u, v);
    stats.total -= t;
    if (t > 0) {
      if ((stats.per_vertex[u] -= t) == 0) --dvt;
      if ((stats.per_vertex[v] -= t) == 0) --dvt;
    }
  } else {
    g.add_edge(u, v);
    stats.total += t;
    if (t > 0) {
      if (stats.per_vertex[u] == 0) ++dvt;
      if (stats.per_vertex[v] == 0) ++dvt;
      stats.per_vertex[u] += t;
      stats.per_vertex[v] += t;
    }
  }
  stats.vt = static_cast<std::uint32_t>(static_cast<int>(stats.vt) + dvt);
  return dvt;
}

}  // namespace trigraph
