#include <doctest.h>

#include <cmath>

#include "trigraph/conditional.hpp"
#include "trigraph/cores.hpp"

using namespace trigraph;

namespace {

Graph complete(std::uint32_t r, std::uint32_t ambient) {
  Graph g(ambient);
  for (std::uint32_t u = 0; u < r; ++u)
    for (std::uint32_t v = u + 1; v < r; ++v) g.add_edge(u, v);
  return g;
}

CoreParams params_k15() {
  // Makes K_15 a seed: (S1) 0.7*400 = 280 <= E(T) ~ 455, (S2) budget ~ 1250.
  CoreParams params;
  params.a = 1.0;
  params.k = 400.0;
  params.w = 0.3;
  params.C = 1.0;
  params.er = ErParams{1000, 1.0};
  return params;
}

}  // namespace

TEST_CASE("seed predicate") {
  const CoreParams params = params_k15();
  Graph k15 = complete(15, 1000);
  SeedCertificate cert = is_seed(k15, params);
  CHECK(cert.s1);
  CHECK(cert.s2);
  CHECK(cert.is_seed);
  CHECK(cert.expected_triangles >= 455.0);

  // Empty graph falls below (a-w)k.
  cert = is_seed(Graph(1000), params);
  CHECK_FALSE(cert.s1);
  CHECK_FALSE(cert.is_seed);

  // A clique just below the triangle threshold fails (S1): C(10,3)=120,
  // E(T) ~ 120.1 < 280.
  cert = is_seed(complete(10, 1000), params);
  CHECK_FALSE(cert.s1);
}

TEST_CASE("core extraction is a fixpoint on cores") {
  const CoreParams params = params_k15();
  Graph k15 = complete(15, 1000);
  // Every K_15 edge drops E(T) by roughly 13 >> t_n ~ 0.1.
  CHECK(params.t() < 1.0);
  CoreCertificate cert = extract_core(k15, params);
  CHECK(cert.steps.empty());
  CHECK(cert.graph == k15);
  CHECK(cert.c1);
  CHECK(cert.c2);
  CHECK(cert.c3);
  CHECK(cert.drop_total == doctest::Approx(0.0));
}

TEST_CASE("core extraction deletes pendant edges and keeps the clique") {
  const CoreParams params = params_k15();
  Graph g = complete(15, 1000);
  // Pendant edges {i, 15+i}: drop ~ 0.015 < t_n ~ 0.096 < clique drop.
  for (std::uint32_t i = 0; i < 6; ++i) g.add_edge(i, 15 + i);
  REQUIRE(is_seed(g, params).is_seed);

  CoreCertificate cert = extract_core(g, params);
  REQUIRE(cert.steps.size() == 6);
  // Lexicographic deletion order.
  for (std::uint32_t i = 0; i < 6; ++i) {
    CHECK(cert.steps[i].u == i);
    CHECK(cert.steps[i].v == 15 + i);
    CHECK(cert.steps[i].drop < params.t());
  }
  CHECK(cert.graph == complete(15, 1000));
  CHECK(cert.c1);
  CHECK(cert.c2);
  CHECK(cert.c3);
  CHECK(cert.min_edge_drop >= params.t());

  // Proof accounting: E_G(T) - E_{G*}(T) = sum of drops < s * t_n.
  double sum = 0.0;
  for (const auto& step : cert.steps) sum += step.drop;
  CHECK(cert.drop_total == doctest::Approx(sum).epsilon(1e-9));
  CHECK(cert.drop_total < static_cast<double>(cert.steps.size()) * params.t());
  // And s t_n <= w k as in the lemma's chain.
  CHECK(static_cast<double>(cert.steps.size()) * params.t() <= params.w * params.k);

  // Determinism.
  CoreCertificate again = extract_core(g, params);
  CHECK(again.graph == cert.graph);
  REQUIRE(again.steps.size() == cert.steps.size());
  for (std::size_t i = 0; i < again.steps.size(); ++i) {
    CHECK(again.steps[i].u == cert.steps[i].u);
    CHECK(again.steps[i].v == cert.steps[i].v);
  }
}

TEST_CASE("isolated edges dissolve under a large t_n") {
  CoreParams params;
  params.a = 1.0;
  params.k = 1000.0;
  params.w = 0.9;
  params.C = 100.0;
  params.er = ErParams{100, 1.0};
  Graph g(100);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(4, 5);
  // Each isolated edge drops E(T) by under 0.03; force deletion.
  REQUIRE(params.t() < 1.0);
  CoreParams big = params;
  big.w = 3.0;  // t_n ~ 0.2... still small; scale k instead
  big.k = 1e9;
  REQUIRE(big.t() > 1.0);
  CoreCertificate cert = extract_core(g, big);
  CHECK(cert.graph.edge_count() == 0);
  CHECK(cert.steps.size() == 3);
  CHECK(cert.c3);  // vacuous
  CHECK(std::isinf(cert.min_edge_drop));
}

TEST_CASE("extraction step count is bounded by the edge count") {
  const CoreParams params = params_k15();
  Graph g = sample_er(ErParams{60, 3.0}, 17);
  Graph embedded(1000);
  for (auto [u, v] : g.edges()) embedded.add_edge(u, v);
  CoreCertificate cert = extract_core(embedded, params);
  CHECK(cert.steps.size() <= embedded.edge_count());
  CHECK(cert.c3);
}

TEST_CASE("core count bound") {
  // Spot value at (m=100, n=1e4, t_n=10, C'=6):
  // 100 * [ (6/10) log(1e4) + log(6*100/100) ].
  CoreCountBound bound = core_count_bound(100.0, 10000, 10.0, 6.0, 1.0);
  const double expected = 100.0 * (0.6 * std::log(1e4) + std::log(6.0));
  CHECK(bound.log_count == doctest::Approx(expected));
  CHECK(bound.valid_regime);

  // Doubling m more than doubles the bound.
  CoreCountBound twice = core_count_bound(200.0, 10000, 10.0, 6.0, 1.0);
  CHECK(twice.log_count > 2.0 * bound.log_count);

  // Huge t_n drives the bound negative: clamped and flagged.
  CoreCountBound clamped = core_count_bound(10.0, 100, 1e9, 6.0, 1.0);
  CHECK(clamped.log_count == 0.0);
  CHECK(clamped.clamped);

  // Regime guard: t_n must exceed lambda + lambda^2.
  CHECK_FALSE(core_count_bound(10.0, 100, 1.5, 6.0, 2.0).valid_regime);
}

TEST_CASE("seed failure bound") {
  SeedFailureBound bound = seed_failure_bound(1.0, 0.1, 100.0, 0.01, 6.0, 100.0);
  CHECK(bound.bound == doctest::Approx(std::pow(0.9, 100.0)).epsilon(1e-10));

  CHECK(seed_failure_bound(1.0, 0.5, 100.0, 0.01, 6.0, 0.0).bound == doctest::Approx(1.0));

  // w close to a drives the bound to zero quickly.
  CHECK(seed_failure_bound(1.0, 0.999, 100.0, 0.01, 6.0, 50.0).bound <
        seed_failure_bound(1.0, 0.5, 100.0, 0.01, 6.0, 50.0).bound);

  CHECK_THROWS_AS(seed_failure_bound(1.0, 1.5, 100.0, 0.01, 6.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(seed_failure_bound(1.0, 0.1, 100.0, 0.01, 6.0, 1e19), std::invalid_argument);
}

TEST_CASE("near clique check") {
  // K_r at delta = 0.01: threshold 0.6 sqrt(r(r-1)) <= r-1 for all r >= 3.
  for (std::uint32_t r = 3; r <= 12; ++r) {
    NearCliqueReport report = near_clique_check(complete(r, r), 0.01);
    CHECK(report.passes);
    CHECK(report.min_degree == r - 1);
    CHECK(report.m == r * (r - 1) / 2);
  }
  // The threshold is exact: at delta small enough even K_3 fails, since
  // (1-4 sqrt(delta)) sqrt(6) > 2.
  NearCliqueReport tiny = near_clique_check(complete(3, 3), 0.001);
  CHECK(tiny.threshold > 2.0);
  CHECK_FALSE(tiny.passes);

  Graph path(5);
  for (std::uint32_t v = 0; v + 1 < 5; ++v) path.add_edge(v, v + 1);
  CHECK_FALSE(near_clique_check(path, 0.01).passes);

  // K_8 minus a perfect matching: min degree 6, e = 24.
  Graph k8m = complete(8, 8);
  for (std::uint32_t i = 0; i < 4; ++i) k8m.remove_edge(2 * i, 2 * i + 1);
  auto check_at = [&](double delta) {
    NearCliqueReport report = near_clique_check(k8m, delta);
    const double threshold = (1.0 - 4.0 * std::sqrt(delta)) * std::sqrt(48.0);
    CHECK(report.threshold == doctest::Approx(threshold));
    CHECK(report.passes == (6.0 >= threshold));
  };
  check_at(0.01);
  check_at(0.0004);
}

TEST_CASE("high minimum degree peeling") {
  // K_r survives whole.
  PeelReport report = high_min_degree_subgraph(complete(9, 9), 0.02);
  REQUIRE(report.subgraph.has_value());
  CHECK(report.subgraph->edge_count() == 36);
  CHECK(report.removed == 0);

  // K_20 plus pendants: pendants peel away.
  Graph g = complete(20, 26);
  for (std::uint32_t i = 0; i < 6; ++i) g.add_edge(i, 20 + i);
  report = high_min_degree_subgraph(g, 0.02);
  REQUIRE(report.subgraph.has_value());
  CHECK(report.subgraph->edge_count() == 190);
  CHECK(report.survivors.size() == 20);
  // Survivors meet the threshold exactly.
  for (std::uint32_t v : report.survivors)
    CHECK(static_cast<double>(report.subgraph->degree(v)) >= report.threshold);

  // Triangle-free star dissolves at small delta.
  Graph star(11);
  for (std::uint32_t leaf = 1; leaf <= 10; ++leaf) star.add_edge(0, leaf);
  report = high_min_degree_subgraph(star, 0.001);
  CHECK_FALSE(report.subgraph.has_value());

  // Regime where the proposition guarantees existence: embeddings of K_3
  // at least (1-delta)(2e)^{3/2} with delta >= e^{-1/2}. Peeling failure
  // here would be a bug.
  Graph k10 = complete(10, 10);
  const SubgraphCounts counts = subgraph_counts(k10);
  const double delta = 0.16;
  REQUIRE(6.0 * static_cast<double>(counts.triangles) >=
          (1.0 - delta) * std::pow(2.0 * static_cast<double>(counts.edges), 1.5));
  report = high_min_degree_subgraph(k10, delta);
  CHECK(report.regime_ok);
  REQUIRE(report.subgraph.has_value());
}
