#pragma once

#include <cstdint>
#include <utility>

#include "trigraph/graph.hpp"

namespace trigraph {

// Counts of vertex triples of [n] by how many of their three pairs are
// edges of the planted graph. 128-bit so the identities stay exact up to
// n ~ 1e5.
struct TripleProfile {
  __int128 a0 = 0;  // triples with no planted edge
  __int128 a1 = 0;
  __int128 a2 = 0;
  __int128 a3 = 0;  // planted triangles
};

// Profile of g against ambient vertex count n (>= g.vertex_count()).
TripleProfile triple_profile(const Graph& g, std::uint64_t ambient_n);

// E_G(T) = a3 + a2 p + a1 p^2 + a0 p^3: the expected number of triangles
// of G_{n,p} conditioned on containing g.
double expected_triangles(const TripleProfile& profile, double p);
double expected_triangles_conditional(const Graph& g, const ErParams& params);

// N(K_{1,2},G) p + N(K_2,G) n p^2 + N(K_3,G) + lambda^3/6, which bounds
// E_G(T) from above for p = lambda/n.
double conditional_upper_bound(const Graph& g, const ErParams& params);

// E_G(T) - E_{G \ e}(T) for an existing edge e={u,v}. Equals
// (1-p) * (co + one*p + none*p^2) over the n-2 third vertices, where co
// counts common neighbors, one the vertices adjacent to exactly one
// endpoint, none the rest.
double edge_drop(const Graph& g, const ErParams& params, std::uint32_t u, std::uint32_t v);

// Monte Carlo estimate of E_G(T): samples G_{n,p} U g and averages T.
// Returns (mean, stderr).
std::pair<double, double> mc_conditional_expectation(const Graph& g, const ErParams& params,
                                                     std::uint64_t samples, std::uint64_t seed);

}  // namespace trigraph
