#include "trigraph/conditional.hpp"

#include <cmath>
#include <stdexcept>

#include "trigraph/rng.hpp"

namespace trigraph {

TripleProfile triple_profile(const Graph& g, std::uint64_t ambient_n) {
  if (ambient_n < g.vertex_count())
    throw std::invalid_argument("triple_profile: ambient n smaller than graph");
  const SubgraphCounts counts = subgraph_counts(g);
  const __int128 n = ambient_n;
  const __int128 e = counts.edges;
  const __int128 cherries = counts.cherries;
  const __int128 tri = counts.triangles;

  TripleProfile profile;
  profile.a3 = tri;
  profile.a2 = cherries - 3 * tri;
  profile.a1 = e * (n - 2) - 2 * cherries + 3 * tri;
  const __int128 all = n * (n - 1) * (n - 2) / 6;
  profile.a0 = all - profile.a1 - profile.a2 - profile.a3;
  if (profile.a0 < 0 || profile.a1 < 0 || profile.a2 < 0)
    throw std::logic_error("triple_profile: negative class count");
  return profile;
}

double expected_triangles(const TripleProfile& profile, double p) {
  return static_cast<double>(profile.a3) + static_cast<double>(profile.a2) * p +
         static_cast<double>(profile.a1) * p * p + static_cast<double>(profile.a0) * p * p * p;
}

double expected_triangles_conditional(const Graph& g, const ErParams& params) {
  return expected_triangles(triple_profile(g, params.n), params.p());
}

double conditional_upper_bound(const Graph& g, const ErParams& params) {
  const SubgraphCounts counts = subgraph_counts(g);
  const double p = params.p();
  const double lambda = params.lambda;
  return static_cast<double>(counts.cherries) * p +
         static_cast<double>(counts.edges) * params.n * p * p +
         static_cast<double>(counts.triangles) + lambda * lambda * lambda / 6.0;
}

double edge_drop(const Graph& g, const ErParams& params, std::uint32_t u, std::uint32_t v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge_drop: edge not present");
  const double p = params.p();
  const std::size_t co = g.count_common_neighbors(u, v);
  const std::size_t one = g.degree(u) + g.degree(v) - 2 - 2 * co;
  const std::size_t none = static_cast<std::size_t>(params.n) - 2 - co - one;
  return (1.0 - p) * (static_cast<double>(co) + static_cast<double>(one) * p +
                      static_cast<double>(none) * p * p);
}

std::pair<double, double> mc_conditional_expectation(const Graph& g, const ErParams& params,
                                                     std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("mc_conditional_expectation: samples >= 1");
  if (g.vertex_count() > params.n)
    throw std::invalid_argument("mc_conditional_expectation: graph larger than ambient n");
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Graph sample = sample_er_p(params.n, params.p(), Rng::substream(seed, i).next());
    for (auto [u, v] : g.edges()) sample.add_edge(u, v);
    const double t = static_cast<double>(triangle_stats(sample).total);
    sum += t;
    sumsq += t * t;
  }
  const double mean = sum / static_cast<double>(samples);
  double var = (sumsq - sum * mean) / std::max<double>(1.0, static_cast<double>(samples - 1));
  if (var < 0) var = 0;
  return {mean, std::sqrt(var / static_cast<double>(samples))};
}

}  // namespace trigraph
