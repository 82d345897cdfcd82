#include "trigraph/smallgraph.hpp"

#include <stdexcept>

namespace trigraph {

SmallGraphSpace::SmallGraphSpace(std::uint32_t n_) : n(n_) {
  if (n > 8) throw std::invalid_argument("SmallGraphSpace: n must be <= 8");
  std::uint8_t idx = 0;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      edge_index[u][v] = idx;
      edge_index[v][u] = idx;
      ++idx;
    }
  edge_bits = idx;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      for (std::uint32_t w = v + 1; w < n; ++w) {
        Triple tr;
        tr.edge_mask = (1U << edge_index[u][v]) | (1U << edge_index[u][w]) |
                       (1U << edge_index[v][w]);
        tr.vertex_mask = (1U << u) | (1U << v) | (1U << w);
        triples.push_back(tr);
      }
}

Graph SmallGraphSpace::to_graph(std::uint32_t mask) const {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (mask & (1U << edge_index[u][v])) g.add_edge(u, v);
  return g;
}

std::uint32_t SmallGraphSpace::from_graph(const Graph& g) const {
  if (g.vertex_count() != n) throw std::invalid_argument("from_graph: size mismatch");
  std::uint32_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= 1U << edge_index[u][v];
  return mask;
}

}  // namespace trigraph
