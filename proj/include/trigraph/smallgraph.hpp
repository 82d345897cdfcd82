#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

// Bitmask view of graphs on n <= 8 vertices. Edge bits follow the
// lexicographic pair order (0,1),(0,2),...,(1,2),..., the same order the
// enumeration strata are partitioned in.
struct SmallGraphSpace {
  explicit SmallGraphSpace(std::uint32_t n);

  std::uint32_t n;
  std::uint32_t edge_bits;  // C(n,2)
  // For each triple {u,v,w}: the 3-edge mask and the 3-vertex mask.
  struct Triple {
    std::uint32_t edge_mask;
    std::uint32_t vertex_mask;
  };
  std::vector<Triple> triples;
  std::array<std::array<std::uint8_t, 8>, 8> edge_index;

  std::uint64_t total_graphs() const { return 1ULL << edge_bits; }

  std::uint32_t triangles(std::uint32_t mask) const {
    std::uint32_t t = 0;
    for (const auto& tr : triples) t += (mask & tr.edge_mask) == tr.edge_mask;
    return t;
  }

  std::uint32_t vt(std::uint32_t mask) const {
    std::uint32_t covered = 0;
    for (const auto& tr : triples)
      if ((mask & tr.edge_mask) == tr.edge_mask) covered |= tr.vertex_mask;
    return static_cast<std::uint32_t>(__builtin_popcount(covered));
  }

  Graph to_graph(std::uint32_t mask) const;
  std::uint32_t from_graph(const Graph& g) const;
};

}  // namespace trigraph
