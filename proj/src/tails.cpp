#include "trigraph/tails.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <vector>

#include "trigraph/rng.hpp"
#include "trigraph/smallgraph.hpp"

namespace trigraph {

namespace {

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::uint64_t stat_of(const TriangleStats& stats, TailStatistic stat) {
  return stat == TailStatistic::T ? stats.total : stats.vt;
}

}  // namespace

double TailEstimate::value() const { return std::exp(log_value); }

TailEstimate exact_tail(std::uint32_t n, double p, TailStatistic stat, double k,
                        bool allow_n8, unsigned threads) {
  const std::uint32_t cap = allow_n8 ? 8 : 7;
  if (n > cap) throw std::invalid_argument("exact_tail: n exceeds enumeration cap");
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("exact_tail: p out of range");
  const SmallGraphSpace space(n);
  const std::uint32_t bits = space.edge_bits;

  // p^e (1-p)^{M-e} per edge count.
  std::vector<double> weight(bits + 1);
  for (std::uint32_t e = 0; e <= bits; ++e)
    weight[e] = std::pow(p, e) * std::pow(1.0 - p, bits - e);

  // Fixed strata over the high-order edge bits; the reduction order below
  // is independent of how many workers ran.
  const std::uint32_t strata_bits = bits >= 6 ? 4u : 0u;
  const std::uint32_t strata = 1u << strata_bits;
  const std::uint64_t per = space.total_graphs() >> strata_bits;

  auto stratum_sum = [&](std::uint32_t s) {
    double sum = 0.0;
    const std::uint64_t begin = per * s;
    for (std::uint64_t mask = begin; mask < begin + per; ++mask) {
      const std::uint32_t m = static_cast<std::uint32_t>(mask);
      const std::uint64_t value =
          stat == TailStatistic::T ? space.triangles(m) : space.vt(m);
      if (static_cast<double>(value) >= k)
        sum += weight[static_cast<std::uint32_t>(__builtin_popcount(m))];
    }
    return sum;
  };

  std::vector<double> partial(strata, 0.0);
  if (threads <= 1) {
    for (std::uint32_t s = 0; s < strata; ++s) partial[s] = stratum_sum(s);
  } else {
    std::vector<std::future<double>> futures;
    futures.reserve(strata);
    for (std::uint32_t s = 0; s < strata; ++s)
      futures.push_back(std::async(std::launch::async, stratum_sum, s));
    for (std::uint32_t s = 0; s < strata; ++s) partial[s] = futures[s].get();
  }
  double total = 0.0;
  for (std::uint32_t s = 0; s < strata; ++s) total += partial[s];

  TailEstimate est;
  est.statistic = stat;
  est.threshold = k;
  est.method = TailMethod::exact;
  est.log_value = std::min(std::log(total), 0.0);  // guard float rounding past 1
  return est;
}

TailEstimate mc_tail(std::uint32_t n, double p, TailStatistic stat, double k,
                     std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples < 100) throw std::invalid_argument("mc_tail: samples must be >= 100");
  constexpr std::uint32_t kSubstreams = 16;
  std::vector<std::uint64_t> quota(kSubstreams, samples / kSubstreams);
  quota[0] += samples % kSubstreams;

  auto run = [&](std::uint32_t sub) {
    Rng rng = Rng::substream(seed, sub);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < quota[sub]; ++i) {
      Graph g = sample_er_p(n, p, rng.next());
      if (static_cast<double>(stat_of(triangle_stats(g), stat)) >= k) ++hits;
    }
    return hits;
  };

  std::vector<std::uint64_t> hits(kSubstreams, 0);
  if (threads <= 1) {
    for (std::uint32_t s = 0; s < kSubstreams; ++s) hits[s] = run(s);
  } else {
    std::vector<std::future<std::uint64_t>> futures;
    for (std::uint32_t s = 0; s < kSubstreams; ++s)
      futures.push_back(std::async(std::launch::async, run, s));
    for (std::uint32_t s = 0; s < kSubstreams; ++s) hits[s] = futures[s].get();
  }
  std::uint64_t total_hits = 0;
  for (auto h : hits) total_hits += h;

  TailEstimate est;
  est.statistic = stat;
  est.threshold = k;
  est.method = TailMethod::mc;
  est.samples = samples;
  est.seed = seed;
  if (total_hits == 0) {
    // One-sided 95% Clopper-Pearson-style upper bound for zero successes.
    est.log_value = std::log1p(-std::pow(0.05, 1.0 / static_cast<double>(samples)));
    est.zero_hit_upper_bound = true;
    return est;
  }
  const double phat = static_cast<double>(total_hits) / static_cast<double>(samples);
  const double se = std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
  est.log_value = std::log(phat);
  est.stderr_log = se / phat;
  return est;
}

std::uint64_t count_cliques(const Graph& g, std::uint32_t r) {
  if (r == 0) return 1;
  if (r == 1) return g.vertex_count();
  // Extend cliques vertex by vertex through ascending candidate lists.
  std::uint64_t count = 0;
  std::vector<std::vector<std::uint32_t>> stack_cand;
  auto extend = [&](auto&& self, const std::vector<std::uint32_t>& cand,
                    std::uint32_t depth) -> void {
    if (depth == r) {
      ++count;
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const std::uint32_t v = cand[i];
      if (r - depth > cand.size() - i) break;
      std::vector<std::uint32_t> next;
      const auto& nbrs = g.neighbors(v);
      std::set_intersection(cand.begin() + i + 1, cand.end(), nbrs.begin(), nbrs.end(),
                            std::back_inserter(next));
      self(self, next, depth + 1);
    }
  };
  std::vector<std::uint32_t> all(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) all[v] = v;
  extend(extend, all, 0);
  return count;
}

TailEstimate is_clique_tail(std::uint32_t n, double p, double k, std::uint32_t r,
                            std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (r < 3 || r > n) throw std::invalid_argument("is_clique_tail: need 3 <= r <= n");
  if (r > 6) throw std::invalid_argument("is_clique_tail: r > 6 rejected (clique counting cost)");
  if (samples < 1) throw std::invalid_argument("is_clique_tail: samples must be >= 1");
  if (!(p > 0 && p < 1)) throw std::invalid_argument("is_clique_tail: p out of range");

  const double log_choose = log_binomial(n, r);
  const double log_pclique = (r * (r - 1) / 2.0) * std::log(p);
  constexpr std::uint32_t kSubstreams = 16;
  std::vector<std::uint64_t> quota(kSubstreams, samples / kSubstreams);
  quota[0] += samples % kSubstreams;

  struct Acc {
    double sum = 0.0, sumsq = 0.0;
  };
  auto run = [&](std::uint32_t sub) {
    Rng rng = Rng::substream(seed, sub);
    Acc acc;
    for (std::uint64_t i = 0; i < quota[sub]; ++i) {
      // Uniform r-subset by partial Fisher-Yates.
      std::vector<std::uint32_t> pool(n);
      for (std::uint32_t v = 0; v < n; ++v) pool[v] = v;
      for (std::uint32_t j = 0; j < r; ++j)
        std::swap(pool[j], pool[j + rng.below(n - j)]);
      std::vector<bool> planted(n, false);
      for (std::uint32_t j = 0; j < r; ++j) planted[pool[j]] = true;

      Graph g(n);
      for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
          if (planted[u] && planted[v])
            g.add_edge(u, v);
          else if (rng.bernoulli(p))
            g.add_edge(u, v);
        }
      double w = 0.0;
      if (static_cast<double>(triangle_stats(g).total) >= k) {
        const std::uint64_t cliques = count_cliques(g, r);
        w = std::exp(log_choose + log_pclique - std::log(static_cast<double>(cliques)));
      }
      acc.sum += w;
      acc.sumsq += w * w;
    }
    return acc;
  };

  std::vector<Acc> partial(kSubstreams);
  if (threads <= 1) {
    for (std::uint32_t s = 0; s < kSubstreams; ++s) partial[s] = run(s);
  } else {
    std::vector<std::future<Acc>> futures;
    for (std::uint32_t s = 0; s < kSubstreams; ++s)
      futures.push_back(std::async(std::launch::async, run, s));
    for (std::uint32_t s = 0; s < kSubstreams; ++s) partial[s] = futures[s].get();
  }
  double sum = 0.0, sumsq = 0.0;
  for (const auto& acc : partial) {
    sum += acc.sum;
    sumsq += acc.sumsq;
  }
  const double mean = sum / static_cast<double>(samples);
  double var = (sumsq - sum * mean) / std::max<double>(1.0, static_cast<double>(samples - 1));
  if (var < 0) var = 0;
  const double se = std::sqrt(var / static_cast<double>(samples));

  TailEstimate est;
  est.statistic = TailStatistic::T;
  est.threshold = k;
  est.method = TailMethod::is_clique;
  est.samples = samples;
  est.seed = seed;
  est.is_lower_bound = true;
  if (mean <= 0) {
    est.log_value = -std::numeric_limits<double>::infinity();
    est.zero_hit_upper_bound = true;
    return est;
  }
  // A raw importance weight can exceed 1; capping keeps the estimate a
  // valid (conservative) probability lower bound.
  est.log_value = std::min(std::log(mean), 0.0);
  est.stderr_log = se / mean;
  return est;
}

std::uint32_t clique_size_for(double k) {
  std::uint32_t r = 3;
  while (static_cast<double>(r) * (r - 1) * (r - 2) / 6.0 < k) ++r;
  return r;
}

TailEstimate clique_lower_bound(std::uint32_t n, double p, double k) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("clique_lower_bound: p out of range");
  const std::uint32_t r = clique_size_for(k);
  if (r > n) throw std::invalid_argument("clique_lower_bound: required clique exceeds n");
  TailEstimate est;
  est.statistic = TailStatistic::T;
  est.threshold = k;
  est.method = TailMethod::analytic_lb;
  est.is_lower_bound = true;
  est.log_value = (static_cast<double>(r) * (r - 1) / 2.0) * std::log(p);
  return est;
}

TailEstimate disjoint_triangles_lower_bound(std::uint32_t n, double p, std::uint64_t k,
                                            double lambda) {
  if (k % 3 != 0 || k == 0) throw std::invalid_argument("disjoint_triangles_lower_bound: 3 | k required");
  if (k > n) throw std::invalid_argument("disjoint_triangles_lower_bound: k <= n required");
  if (!(p > 0 && p < 1)) throw std::invalid_argument("disjoint_triangles_lower_bound: p out of range");
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  double log_value = log_binomial(nd, kd);
  log_value += std::lgamma(kd + 1.0) - (kd / 3.0) * std::log(6.0) - std::lgamma(kd / 3.0 + 1.0);
  log_value += kd * std::log(p);
  log_value += (kd * (kd - 1) / 2.0 - kd + (nd - kd) * kd) * std::log1p(-p);
  log_value += std::log(0.9) - lambda * lambda * lambda / 6.0;

  TailEstimate est;
  est.statistic = TailStatistic::VT;
  est.threshold = kd;
  est.method = TailMethod::analytic_lb;
  est.is_lower_bound = true;
  est.asymptotic_validity = true;
  est.log_value = log_value;
  return est;
}

double vt_tail_implied_constant(std::uint32_t n, double p, double k) {
  if (k < 1) throw std::invalid_argument("vt_tail_implied_constant: k must be >= 1");
  const TailEstimate exact = exact_tail(n, p, TailStatistic::VT, k);
  const double rate = k / 3.0 * std::log(k / 3.0);
  return std::abs(-exact.log_value - rate) / k;
}

ConditionedSample conditioned_sample(std::uint32_t n, double p, TailStatistic stat, double k,
                                     std::uint64_t seed, std::uint64_t max_tries) {
  Rng rng(seed);
  for (std::uint64_t tries = 1; tries <= max_tries; ++tries) {
    Graph g = sample_er_p(n, p, rng.next());
    if (static_cast<double>(stat_of(triangle_stats(g), stat)) >= k)
      return {std::move(g), tries};
  }
  throw RejectionExhausted(max_tries);
}

}  // namespace trigraph
