#pragma once

#include <cstdint>
#include <optional>

#include "trigraph/graph.hpp"

namespace trigraph {

enum class TailStatistic { T, VT };
enum class TailMethod { exact, mc, is_clique, analytic_lb };

// One tail-probability estimate, carried in log space.
struct TailEstimate {
  TailStatistic statistic = TailStatistic::T;
  double threshold = 0.0;
  double log_value = 0.0;  // log P, or log of the bound
  TailMethod method = TailMethod::exact;
  std::optional<double> stderr_log;  // relative (log-space) standard error
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  bool is_lower_bound = false;
  bool zero_hit_upper_bound = false;  // MC saw no hits; log_value is a
                                      // one-sided 95% upper confidence bound
  bool asymptotic_validity = false;   // bound uses an n-large-enough factor

  double value() const;  // exp(log_value)
};

// Exact tail by iterating all 2^{C(n,2)} graphs. n <= 7 by default; n = 8
// allowed only with allow_n8 (minutes-scale). threads > 1 splits the mask
// space into fixed strata with a fixed reduction order.
TailEstimate exact_tail(std::uint32_t n, double p, TailStatistic stat, double k,
                        bool allow_n8 = false, unsigned threads = 1);

// Plain Monte Carlo frequency estimate; needs samples >= 100. Runs on 16
// fixed substreams regardless of the thread cap, so results do not depend
// on parallelism.
TailEstimate mc_tail(std::uint32_t n, double p, TailStatistic stat, double k,
                     std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

// Importance sampling from a planted-K_r proposal. Unbiased for
// P(T >= k and an r-clique exists), hence a lower bound on P(T >= k).
// r <= 6 (exact r-clique counting in the weight).
TailEstimate is_clique_tail(std::uint32_t n, double p, double k, std::uint32_t r,
                            std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

// log p^{C(r,2)} for the smallest r with C(r,3) >= k: a fixed r-clique
// forces T >= k, so this is a rigorous lower bound.
TailEstimate clique_lower_bound(std::uint32_t n, double p, double k);

// Smallest r >= 3 with C(r,3) >= k.
std::uint32_t clique_size_for(double k);

// log of C(n,k) k!/(3!^{k/3} (k/3)!) p^k (1-p)^{C(k,2)-k+(n-k)k} * 0.9 e^{-lambda^3/6}.
// The 0.9 e^{-lambda^3/6} factor is asymptotic in n; the estimate is
// flagged accordingly.
TailEstimate disjoint_triangles_lower_bound(std::uint32_t n, double p, std::uint64_t k,
                                            double lambda);

// Number of r-cliques, exact. Intended for small r (<= 6 in the IS weight).
std::uint64_t count_cliques(const Graph& g, std::uint32_t r);

// Empirically implied constant C in the two-sided V_T tail bounds
// (k/3)log(k/3) -+ Ck: returns |( -log P(V_T >= k) ) - (k/3)log(k/3)| / k
// from the exact tail. Reported, never asserted against a fixed value.
double vt_tail_implied_constant(std::uint32_t n, double p, double k);

// Rejection sampling of G_{n,p} conditioned on {stat >= k}.
struct ConditionedSample {
  Graph graph;
  std::uint64_t tries = 0;
};
struct RejectionExhausted : std::runtime_error {
  explicit RejectionExhausted(std::uint64_t tries_)
      : std::runtime_error("rejection sampling exhausted after " + std::to_string(tries_) +
                           " tries"),
        tries(tries_) {}
  std::uint64_t tries;
};
ConditionedSample conditioned_sample(std::uint32_t n, double p, TailStatistic stat, double k,
                                     std::uint64_t seed, std::uint64_t max_tries);

}  // namespace trigraph
