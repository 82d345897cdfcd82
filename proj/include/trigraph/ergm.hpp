#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

// The V_T-tilted exponential random graph: density proportional to
// exp(beta log(n) V_T) against G(n, lambda/n).
enum class ErgmInit { empty, complete };

struct ErgmConfig {
  std::uint32_t n = 0;
  double lambda = 1.0;
  double beta = 0.0;  // tilt is beta * log(n) * V_T
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t thin = 100;
  std::uint64_t seed = 0;
  ErgmInit init = ErgmInit::empty;

  bool valid() const {
    return n >= 2 && lambda > 0 && lambda < static_cast<double>(n) && steps > burn_in &&
           thin >= 1 && beta >= 0;
  }
};

struct ErgmTrace {
  std::vector<std::uint32_t> vt;  // post burn-in, thinned
  double acceptance_rate = 0.0;
  Graph final_graph;

  double mean_vt() const;
  // Batch-means standard error of mean_vt (32 batches).
  double stderr_vt() const;
};

// log Z_n(beta log n) by full enumeration; n <= 7.
double ergm_exact_log_partition(std::uint32_t n, double lambda, double beta);

// Exact mean of V_T under the tilted measure, by enumeration; n <= 7.
double ergm_exact_mean_vt(std::uint32_t n, double lambda, double beta);

// E[V_T] under plain G(n, lambda/n), by enumeration; n <= 7.
double er_exact_mean_vt(std::uint32_t n, double lambda);

// Single-edge-flip Metropolis chain targeting the tilted measure. The
// incremental V_T bookkeeping is recounted from scratch every 1e5 steps.
ErgmTrace ergm_mcmc(const ErgmConfig& config);

struct ErgmSweepRow {
  double beta = 0.0;
  ErgmInit init = ErgmInit::empty;
  double mean_vt_fraction = 0.0;  // mean V_T / n
  double stderr_fraction = 0.0;
  double acceptance_rate = 0.0;
  bool mixing_warning = false;  // paired-chain disagreement above tolerance
};

// Independent chains per (beta, init) with substream seeds derived from
// master_seed. With paired = true each beta runs from both empty and
// complete starts and rows are flagged when the two disagree by more
// than mixing_tolerance.
std::vector<ErgmSweepRow> ergm_sweep(std::uint32_t n, double lambda,
                                     const std::vector<double>& betas, std::uint64_t steps,
                                     std::uint64_t burn_in, std::uint64_t thin,
                                     std::uint64_t master_seed, bool paired = true,
                                     double mixing_tolerance = 0.15, unsigned threads = 1);

// (beta - 1/3)_+, the predicted n log n coefficient of log Z.
double partition_scaling(double beta);

}  // namespace trigraph
