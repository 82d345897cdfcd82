#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace trigraph {

// Simple undirected graph on {0..n-1}, adjacency kept as sorted neighbor
// vectors. No self-loops, no parallel edges. n = 0 and n = 1 are legal.
class Graph {
 public:
  explicit Graph(std::uint32_t n = 0) : n_(n), edge_count_(0), adj_(n) {}

  std::uint32_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    std::uint32_t w = (&a == &adj_[u]) ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
  }

  // Returns false if the edge was already present (or u==v / out of range).
  bool add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_ || u == v || has_edge(u, v)) return false;
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
    return true;
  }

  bool remove_edge(std::uint32_t u, std::uint32_t v) {
    if (!has_edge(u, v)) return false;
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --edge_count_;
    return true;
  }

  // Edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 0; u < n_; ++u)
      for (std::uint32_t v : adj_[u])
        if (v > u) out.emplace_back(u, v);
    return out;
  }

  std::size_t count_common_neighbors(std::uint32_t u, std::uint32_t v) const {
    return for_common_neighbors(u, v, [](std::uint32_t) {});
  }

  // Calls fn(w) for every w adjacent to both u and v; returns the count.
  template <typename Fn>
  std::size_t for_common_neighbors(std::uint32_t u, std::uint32_t v, Fn fn) const {
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    std::size_t count = 0;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        fn(*ia);
        ++count;
        ++ia;
        ++ib;
      }
    }
    return count;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  static void insert_sorted(std::vector<std::uint32_t>& vec, std::uint32_t x) {
    vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
  }
  static void erase_sorted(std::vector<std::uint32_t>& vec, std::uint32_t x) {
    vec.erase(std::lower_bound(vec.begin(), vec.end(), x));
  }

  std::uint32_t n_;
  std::size_t edge_count_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

// Erdos-Renyi parameters: p = lambda / n.
struct ErParams {
  std::uint32_t n = 0;
  double lambda = 0.0;

  double p() const { return n == 0 ? 0.0 : lambda / n; }
  // epsilon_n = k^(-2/3), the scale the tail theorems are stated at.
  static double epsilon(double k) { return std::pow(k, -2.0 / 3.0); }
  bool valid() const { return n > 0 && lambda >= 0.0 && lambda < static_cast<double>(n); }
};

struct TriangleStats {
  std::uint64_t total = 0;                 // T
  std::vector<std::uint64_t> per_vertex;   // c_v, sum = 3T
  std::uint32_t vt = 0;                    // #{v : c_v > 0}
};

struct SubgraphCounts {
  std::uint64_t edges = 0;      // N(K_2, G)
  std::uint64_t cherries = 0;   // N(K_{1,2}, G) = sum_v C(d_v, 2)
  std::uint64_t triangles = 0;  // N(K_3, G)
};

// G(n, lambda/n) with independent edges; deterministic for a given seed.
Graph sample_er(const ErParams& params, std::uint64_t seed);

// Test hook taking p directly (p = 0 and p = 1 included).
Graph sample_er_p(std::uint32_t n, double p, std::uint64_t seed);

TriangleStats triangle_stats(const Graph& g);
SubgraphCounts subgraph_counts(const Graph& g);

// Flips edge {u,v} and patches stats by scanning common neighbors only.
// Returns the change in vt.
int toggle_edge(Graph& g, TriangleStats& stats, std::uint32_t u, std::uint32_t v);

// (dT, dVT) that toggling {u,v} would cause, without mutating anything.
std::pair<std::int64_t, int> toggle_preview(const Graph& g, const TriangleStats& stats,
                                            std::uint32_t u, std::uint32_t v);

}  // namespace trigraph
