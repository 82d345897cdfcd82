#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "trigraph/local_limit.hpp"
#include "trigraph/rng.hpp"

using namespace trigraph;

namespace {

Graph complete(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// BFS over a decoded code, for the connectivity/radius invariant.
std::pair<bool, int> decoded_connected_radius(const DecodedRooted& decoded) {
  std::vector<int> dist(decoded.n, -1);
  std::vector<std::uint32_t> queue{0};
  dist[0] = 0;
  int radius = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::uint32_t v = 0; v < decoded.n; ++v) {
      if (((decoded.adj[u] >> v) & 1u) && dist[v] == -1) {
        dist[v] = dist[u] + 1;
        radius = std::max(radius, dist[v]);
        queue.push_back(v);
      }
    }
  }
  return {queue.size() == decoded.n, radius};
}

}  // namespace

TEST_CASE("canonical codes identify isomorphic rooted graphs") {
  // A 6-vertex test graph with a couple of triangles.
  std::vector<std::uint16_t> adj(6, 0);
  auto link = [&](int a, int b) {
    adj[a] |= static_cast<std::uint16_t>(1u << b);
    adj[b] |= static_cast<std::uint16_t>(1u << a);
  };
  link(0, 1);
  link(0, 2);
  link(1, 2);
  link(2, 3);
  link(3, 4);
  link(3, 5);
  link(4, 5);
  const std::string code = canonical_rooted_code(adj);

  // Random relabelings fixing the root yield the same code.
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> perm{0};
    std::vector<std::uint32_t> rest{1, 2, 3, 4, 5};
    for (std::size_t j = 0; j < rest.size(); ++j)
      std::swap(rest[j], rest[j + rng.below(rest.size() - j)]);
    perm.insert(perm.end(), rest.begin(), rest.end());
    std::vector<std::uint16_t> relabeled(6, 0);
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v)
        if ((adj[u] >> v) & 1u)
          relabeled[perm[u]] |= static_cast<std::uint16_t>(1u << perm[v]);
    REQUIRE(canonical_rooted_code(relabeled) == code);
  }

  // Decode round trip: same canonical form again.
  const DecodedRooted decoded = decode_rooted_code(code);
  CHECK(canonical_rooted_code(decoded.adj) == code);
}

TEST_CASE("root placement distinguishes rooted classes") {
  // Path on three vertices rooted at an end vs at the middle.
  std::vector<std::uint16_t> end(3, 0), middle(3, 0);
  end[0] = 1 << 1;
  end[1] = (1 << 0) | (1 << 2);
  end[2] = 1 << 1;
  middle[0] = (1 << 1) | (1 << 2);
  middle[1] = 1 << 0;
  middle[2] = 1 << 0;
  CHECK(canonical_rooted_code(end) != canonical_rooted_code(middle));
}

TEST_CASE("census basics") {
  Graph k4 = complete(4);
  NeighborhoodCensus census = neighborhood_census(k4, 0);
  CHECK(census.counts.size() == 1);
  CHECK(census.frequency(census.counts.begin()->first) == doctest::Approx(1.0));

  census = neighborhood_census(k4, 1);
  CHECK(census.counts.size() == 1);  // every root sees the same ball

  Graph empty(10);
  census = neighborhood_census(empty, 3);
  CHECK(census.counts.size() == 1);
  CHECK(decode_rooted_code(census.counts.begin()->first).n == 1);
}

TEST_CASE("census is invariant under vertex relabeling") {
  Graph g = sample_er(ErParams{40, 2.5}, 21);
  Rng rng(9);
  std::vector<std::uint32_t> perm(40);
  for (std::uint32_t v = 0; v < 40; ++v) perm[v] = v;
  for (std::size_t j = 0; j < perm.size(); ++j)
    std::swap(perm[j], perm[j + rng.below(perm.size() - j)]);
  Graph relabeled(40);
  for (auto [u, v] : g.edges()) relabeled.add_edge(perm[u], perm[v]);

  const NeighborhoodCensus a = neighborhood_census(g, 2);
  const NeighborhoodCensus b = neighborhood_census(relabeled, 2);
  CHECK(a.counts == b.counts);
  CHECK(a.overflow_count == b.overflow_count);
  CHECK(census_tv(a, b) == doctest::Approx(0.0));
}

TEST_CASE("census codes decode to connected graphs within the radius") {
  Graph g = sample_er(ErParams{120, 2.0}, 3);
  const int r = 2;
  NeighborhoodCensus census = neighborhood_census(g, r);
  for (const auto& [code, count] : census.counts) {
    (void)count;
    const DecodedRooted decoded = decode_rooted_code(code);
    auto [connected, radius] = decoded_connected_radius(decoded);
    REQUIRE(connected);
    REQUIRE(radius <= r);
  }
}

TEST_CASE("total variation properties") {
  Graph g = sample_er(ErParams{60, 2.0}, 4);
  Graph h = sample_er(ErParams{60, 2.0}, 5);
  NeighborhoodCensus a = neighborhood_census(g, 1);
  NeighborhoodCensus b = neighborhood_census(h, 1);
  CHECK(census_tv(a, a) == doctest::Approx(0.0));
  const double tv_ab = census_tv(a, b);
  CHECK(tv_ab >= 0.0);
  CHECK(tv_ab <= 1.0);

  // Disjoint supports: empty graph census vs K_4 census at depth 1.
  NeighborhoodCensus empty_census = neighborhood_census(Graph(5), 1);
  NeighborhoodCensus k4_census = neighborhood_census(complete(4), 1);
  CHECK(census_tv(empty_census, k4_census) == doctest::Approx(1.0));

  // Mixture: TV(a, (a+b)/2) <= 1/2.
  NeighborhoodCensus mix = a;
  mix.merge(b);
  CHECK(census_tv(a, mix) <= 0.5 + 1e-12);

  NeighborhoodCensus deeper = neighborhood_census(g, 2);
  CHECK_THROWS_AS(census_tv(a, deeper), std::invalid_argument);
}

TEST_CASE("galton watson census") {
  // lambda = 0: all mass on the single-vertex code.
  NeighborhoodCensus census = sample_ugw_census(0.0, 2, 500, 1);
  CHECK(census.counts.size() == 1);
  CHECK(decode_rooted_code(census.counts.begin()->first).n == 1);

  // Depth-1 root degree is Poisson(lambda).
  census = sample_ugw_census(2.0, 1, 100000, 2);
  CHECK(census_depth1_tv_to_poisson(census, 2.0) < 0.01);

  // Mean root offspring within 3 sigma of lambda.
  double mean = 0.0;
  for (const auto& [code, count] : census.counts)
    mean += static_cast<double>(decode_rooted_code(code).root_degree()) *
            static_cast<double>(count) / static_cast<double>(census.sample_size);
  // Overflow trees at depth 1 have degree >= 12; fold them in at the cap.
  mean += 12.0 * census.overflow_fraction();
  CHECK(std::abs(mean - 2.0) <= 3.0 * std::sqrt(2.0 / 100000.0) + 0.001);

  // Depth-2 trees: frequencies plus overflow sum to one.
  census = sample_ugw_census(2.0, 2, 20000, 3);
  double total = census.overflow_fraction();
  for (const auto& [code, count] : census.counts) {
    (void)count;
    total += census.frequency(code);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("er depth-1 census approximates the Poisson degree law") {
  Graph g = sample_er(ErParams{2000, 2.0}, 14);
  NeighborhoodCensus census = neighborhood_census(g, 1);
  CHECK(census_depth1_tv_to_poisson(census, 2.0) < 0.05);
}

TEST_CASE("conditional experiment with a vacuous condition") {
  LocalExperimentResult result = conditional_local_experiment(60, 1.5, 0.0, 1, 50, 8);
  // T >= 0 conditions on nothing: both ensembles share the law, so the
  // TV is Monte Carlo noise.
  CHECK(result.tv_cond_uncond < 0.08);
  CHECK(result.cond.sample_size == 50 * 60);
  CHECK(result.total_tries == 50);
}
