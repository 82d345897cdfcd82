#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

// Census of rooted r-neighborhoods keyed by canonical code. Neighborhoods
// larger than the 12-vertex coder cap land in the overflow bucket; they
// are counted, never dropped.
struct NeighborhoodCensus {
  int depth = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t overflow_count = 0;
  std::map<std::string, std::uint64_t> counts;

  double frequency(const std::string& code) const;
  double overflow_fraction() const;
  void merge(const NeighborhoodCensus& other);
};

inline constexpr std::uint32_t kCoderCap = 12;

// Canonical code of a small rooted graph. adj[i] is the neighbor bitmask
// of local vertex i; the root is local vertex 0. Codes of isomorphic
// rooted graphs coincide; the string is decodable.
std::string canonical_rooted_code(const std::vector<std::uint16_t>& adj);

struct DecodedRooted {
  std::uint32_t n = 0;
  std::vector<std::uint16_t> adj;  // root at index 0

  std::uint32_t root_degree() const { return static_cast<std::uint32_t>(__builtin_popcount(adj.empty() ? 0 : adj[0])); }
};
DecodedRooted decode_rooted_code(const std::string& code);

// Induced ball of radius r around root, root-first local labels; nullopt
// when the ball exceeds cap vertices.
std::optional<std::vector<std::uint16_t>> neighborhood_ball(const Graph& g, std::uint32_t root,
                                                            int r, std::uint32_t cap = kCoderCap);

// Census over all vertices, or over a uniform vertex sample (without
// replacement) when sample_size > 0.
NeighborhoodCensus neighborhood_census(const Graph& g, int r, std::uint64_t sample_size = 0,
                                       std::uint64_t seed = 0);

// Depth-r truncated Galton-Watson trees with Poi(lambda) offspring,
// encoded by the same coder. Trees passing size_cap during generation
// overflow (the coder cap applies afterwards as well).
NeighborhoodCensus sample_ugw_census(double lambda, int r, std::uint64_t samples,
                                     std::uint64_t seed, std::uint64_t size_cap = 10000);

// Total variation over the union of codes; overflow buckets compared as a
// code of their own. Depths must match.
double census_tv(const NeighborhoodCensus& a, const NeighborhoodCensus& b);

// TV between the root-degree marginal of a depth-1 census and Poi(lambda),
// on the bins {0,...,11, >=12} (overflow = degree >= 12).
double census_depth1_tv_to_poisson(const NeighborhoodCensus& census, double lambda);

std::string census_to_json(const NeighborhoodCensus& census);

// Censuses from graphs conditioned on T >= k (rejection sampling) and
// unconditioned, plus a UGW census of matching size.
struct LocalExperimentResult {
  NeighborhoodCensus cond, uncond, ugw;
  double tv_cond_uncond = 0.0;
  double tv_cond_ugw = 0.0;
  std::uint64_t total_tries = 0;
};
LocalExperimentResult conditional_local_experiment(std::uint32_t n, double lambda, double k,
                                                   int r, std::uint64_t graph_samples,
                                                   std::uint64_t seed,
                                                   std::uint64_t max_tries_per_graph = 1000000);

}  // namespace trigraph
