#include "trigraph/ergm.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "trigraph/rng.hpp"
#include "trigraph/smallgraph.hpp"

namespace trigraph {

double ErgmTrace::mean_vt() const {
  if (vt.empty()) return 0.0;
  double sum = 0.0;
  for (auto v : vt) sum += v;
  return sum / static_cast<double>(vt.size());
}

double ErgmTrace::stderr_vt() const {
  const std::size_t batches = 32;
  if (vt.size() < 2 * batches) return 0.0;
  const std::size_t per = vt.size() / batches;
  std::vector<double> means;
  means.reserve(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    double sum = 0.0;
    for (std::size_t i = b * per; i < (b + 1) * per; ++i) sum += vt[i];
    means.push_back(sum / static_cast<double>(per));
  }
  double mean = 0.0;
  for (double m : means) mean += m;
  mean /= batches;
  double var = 0.0;
  for (double m : means) var += (m - mean) * (m - mean);
  var /= (batches - 1);
  return std::sqrt(var / batches);
}

namespace {

struct ExactTilt {
  double log_z;
  double mean_vt;
};

ExactTilt exact_tilt(std::uint32_t n, double lambda, double beta) {
  if (n > 7) throw std::invalid_argument("ergm exact: n exceeds enumeration cap");
  if (n < 2) throw std::invalid_argument("ergm exact: n must be >= 2");
  const double p = lambda / n;
  if (!(p > 0 && p < 1)) throw std::invalid_argument("ergm exact: need 0 < lambda < n");
  const SmallGraphSpace space(n);
  const double logp = std::log(p), log1mp = std::log1p(-p), logn = std::log(n);
  double z = 0.0, zvt = 0.0;
  for (std::uint64_t mask = 0; mask < space.total_graphs(); ++mask) {
    const std::uint32_t m = static_cast<std::uint32_t>(mask);
    const int e = __builtin_popcount(m);
    const std::uint32_t vt = space.vt(m);
    const double w = std::exp(e * logp + (space.edge_bits - e) * log1mp + beta * vt * logn);
    z += w;
    zvt += w * vt;
  }
  return {std::log(z), zvt / z};
}

}  // namespace

double ergm_exact_log_partition(std::uint32_t n, double lambda, double beta) {
  return exact_tilt(n, lambda, beta).log_z;
}

double ergm_exact_mean_vt(std::uint32_t n, double lambda, double beta) {
  return exact_tilt(n, lambda, beta).mean_vt;
}

double er_exact_mean_vt(std::uint32_t n, double lambda) {
  return ergm_exact_mean_vt(n, lambda, 0.0);
}

ErgmTrace ergm_mcmc(const ErgmConfig& config) {
  if (!config.valid()) throw std::invalid_argument("ergm_mcmc: invalid config");
  const std::uint32_t n = config.n;
  const double p = config.lambda / n;
  const double log_odds = std::log(p) - std::log1p(-p);  // log(p/(1-p))
  const double tilt = config.beta * std::log(static_cast<double>(n));

  Graph g(n);
  if (config.init == ErgmInit::complete) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  TriangleStats stats = triangle_stats(g);

  Rng rng(config.seed);
  ErgmTrace trace;
  trace.vt.reserve((config.steps - config.burn_in) / config.thin + 1);
  std::uint64_t accepted = 0;

  for (std::uint64_t step = 1; step <= config.steps; ++step) {
    const std::uint32_t u = static_cast<std::uint32_t>(rng.below(n));
    std::uint32_t v = static_cast<std::uint32_t>(rng.below(n - 1));
    if (v >= u) ++v;
    const bool removing = g.has_edge(u, v);
    const auto [dt, dvt] = toggle_preview(g, stats, u, v);
    (void)dt;
    const double log_ratio = (removing ? -log_odds : log_odds) + tilt * dvt;
    if (log_ratio >= 0.0 || std::log(rng.uniform01()) < log_ratio) {
      toggle_edge(g, stats, u, v);
      ++accepted;
    }
    if (step > config.burn_in && (step - config.burn_in) % config.thin == 0)
      trace.vt.push_back(stats.vt);
    if (step % 100000 == 0) {
      // Guard the incremental bookkeeping against drift.
      TriangleStats fresh = triangle_stats(g);
      if (fresh.total != stats.total || fresh.vt != stats.vt)
        throw std::logic_error("ergm_mcmc: incremental stats diverged from recount");
    }
  }
  trace.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(config.steps);
  trace.final_graph = std::move(g);
  return trace;
}

std::vector<ErgmSweepRow> ergm_sweep(std::uint32_t n, double lambda,
                                     const std::vector<double>& betas, std::uint64_t steps,
                                     std::uint64_t burn_in, std::uint64_t thin,
                                     std::uint64_t master_seed, bool paired,
                                     double mixing_tolerance, unsigned threads) {
  if (betas.empty()) throw std::invalid_argument("ergm_sweep: betas must be non-empty");
  std::vector<ErgmConfig> configs;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    ErgmConfig base;
    base.n = n;
    base.lambda = lambda;
    base.beta = betas[i];
    base.steps = steps;
    base.burn_in = burn_in;
    base.thin = thin;
    base.init = ErgmInit::empty;
    base.seed = Rng::substream(master_seed, 2 * i).next();
    configs.push_back(base);
    if (paired) {
      base.init = ErgmInit::complete;
      base.seed = Rng::substream(master_seed, 2 * i + 1).next();
      configs.push_back(base);
    }
  }

  std::vector<ErgmTrace> traces(configs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < configs.size(); ++i) traces[i] = ergm_mcmc(configs[i]);
  } else {
    std::vector<std::future<ErgmTrace>> futures;
    for (const auto& cfg : configs)
      futures.push_back(std::async(std::launch::async, [cfg] { return ergm_mcmc(cfg); }));
    for (std::size_t i = 0; i < configs.size(); ++i) traces[i] = futures[i].get();
  }

  std::vector<ErgmSweepRow> rows(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    rows[i].beta = configs[i].beta;
    rows[i].init = configs[i].init;
    rows[i].mean_vt_fraction = traces[i].mean_vt() / n;
    rows[i].stderr_fraction = traces[i].stderr_vt() / n;
    rows[i].acceptance_rate = traces[i].acceptance_rate;
  }
  if (paired) {
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
      const bool warn =
          std::abs(rows[i].mean_vt_fraction - rows[i + 1].mean_vt_fraction) > mixing_tolerance;
      rows[i].mixing_warning = rows[i + 1].mixing_warning = warn;
    }
  }
  return rows;
}

double partition_scaling(double beta) {
  if (beta < 0) throw std::invalid_argument("partition_scaling: beta must be >= 0");
  return std::max(beta - 1.0 / 3.0, 0.0);
}

}  // namespace trigraph
