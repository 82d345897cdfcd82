// Command-line front end. Everything flows through the C API in
// trigraph.h; this file only parses flags and formats CSV/JSON.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(tg_status status) {
  const int code = (status == TG_ERR_INVALID || status == TG_ERR_PARSE ||
                    status == TG_ERR_LIMIT || status == TG_ERR_INFEASIBLE)
                       ? kExitValidation
                       : kExitRuntime;
  throw CliError{code, tg_last_error()};
}

void check(tg_status status) {
  if (status != TG_OK) die(status);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Atomic emit: temp file + rename when a path is given, stdout otherwise.
void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  const std::string tmp = output_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kExitRuntime, "cannot write " + tmp};
    out << content;
  }
  if (std::rename(tmp.c_str(), output_path.c_str()) != 0)
    throw CliError{kExitRuntime, "rename failed for " + output_path};
}

std::string seed_header(std::uint64_t master_seed, const std::string& substreams) {
  std::ostringstream ss;
  ss << "# master_seed=" << master_seed;
  if (!substreams.empty()) ss << " substreams=" << substreams;
  ss << '\n';
  return ss.str();
}

std::string tail_csv_row(const tg_tail_estimate& est) {
  static const char* method_names[] = {"exact", "mc", "is", "analytic"};
  std::ostringstream ss;
  ss << (est.statistic == TG_STAT_T ? "T" : "VT") << ',' << fmt(est.threshold) << ','
     << method_names[est.method] << (est.zero_hit_upper_bound ? "_zero" : "") << ','
     << fmt(est.log_value) << ',' << (est.has_stderr ? fmt(est.stderr_log) : "") << ','
     << (est.is_lower_bound ? 1 : 0) << ',' << (est.has_samples ? std::to_string(est.samples) : "")
     << ',' << (est.has_samples ? std::to_string(est.seed) : "") << '\n';
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigraph: sparse Erdos-Renyi graphs with many triangles"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker cap for parallel sections");

  // ---- tail ----
  auto* tail = app.add_subcommand("tail", "tail probabilities of T and V_T");
  std::string tail_stat = "T", tail_method = "exact", tail_output;
  std::uint32_t tail_n = 7;
  double tail_lambda = 1.0, tail_k = 1.0;
  std::uint64_t tail_samples = 100000, tail_seed = 0;
  std::uint32_t tail_r = 0;
  bool tail_allow_n8 = false;
  tail->add_option("--stat", tail_stat, "T or VT")->check(CLI::IsMember({"T", "VT"}));
  tail->add_option("--n", tail_n, "vertex count")->required();
  tail->add_option("--lambda", tail_lambda, "edge density parameter, p = lambda/n")->required();
  tail->add_option("--k", tail_k, "threshold")->required();
  tail->add_option("--method", tail_method, "exact | mc | is | analytic")
      ->check(CLI::IsMember({"exact", "mc", "is", "analytic"}));
  tail->add_option("--samples", tail_samples, "Monte Carlo sample count");
  tail->add_option("--seed", tail_seed, "master seed");
  tail->add_option("--r", tail_r, "planted clique size for --method is (default: smallest viable)");
  tail->add_flag("--allow-n8", tail_allow_n8, "permit the n=8 enumeration (minutes)");
  tail->add_option("--output", tail_output, "output file (atomic write)");

  // ---- phi ----
  auto* phi = app.add_subcommand("phi", "variational problem Phi_{n,p,k}(a)");
  std::uint32_t phi_n = 6;
  double phi_p = 0.1, phi_k = 1.0, phi_a = 1.0, phi_w = 0.0, phi_log_base = 0.0;
  bool phi_exact_flag = false, phi_bounds_flag = false;
  std::string phi_output, phi_witness_prefix;
  phi->add_option("--n", phi_n)->required();
  phi->add_option("--p", phi_p)->required();
  phi->add_option("--k", phi_k)->required();
  phi->add_option("--a", phi_a)->required();
  phi->add_option("--w", phi_w, "perturbation");
  phi->add_flag("--exact", phi_exact_flag, "exhaustive solve (n <= 6)");
  phi->add_flag("--bounds", phi_bounds_flag, "closed-form clique upper / edge lower bounds");
  phi->add_option("--log-base", phi_log_base,
                  "display values in this log base (computation stays in natural log)");
  phi->add_option("--output", phi_output);
  phi->add_option("--witness-prefix", phi_witness_prefix,
                  "write witnesses to <prefix><method>.edges");

  // ---- core ----
  auto* core = app.add_subcommand("core", "seed check and greedy core extraction");
  std::string core_input, core_output;
  double core_a = 1.0, core_k = 1.0, core_w = 0.1, core_c = 6.0, core_lambda = 1.0;
  core->add_option("--input", core_input, "edge-list file")->required();
  core->add_option("--a", core_a)->required();
  core->add_option("--k", core_k)->required();
  core->add_option("--w", core_w)->required();
  core->add_option("--C", core_c, "free constant (default 6)");
  core->add_option("--lambda", core_lambda)->required();
  core->add_option("--output", core_output);

  // ---- qbasic ----
  auto* qbasic = app.add_subcommand("qbasic", "q-basic extraction and decomposition");
  std::string qbasic_input, qbasic_output;
  qbasic->add_option("--input", qbasic_input, "edge-list file")->required();
  qbasic->add_option("--output", qbasic_output);

  // ---- ergm ----
  auto* ergm = app.add_subcommand("ergm", "V_T-tilted exponential random graph MCMC");
  std::uint32_t ergm_n = 100;
  double ergm_lambda = 1.0, ergm_beta = -1.0;
  std::vector<double> ergm_grid;
  std::uint64_t ergm_steps = 1000000, ergm_burnin = 100000, ergm_thin = 100, ergm_seed = 0;
  std::string ergm_init = "both", ergm_output, ergm_trace_out;
  ergm->add_option("--n", ergm_n)->required();
  ergm->add_option("--lambda", ergm_lambda)->required();
  ergm->add_option("--beta", ergm_beta, "single tilt value");
  ergm->add_option("--beta-grid", ergm_grid, "list of tilt values")->expected(-1);
  ergm->add_option("--steps", ergm_steps);
  ergm->add_option("--burnin", ergm_burnin);
  ergm->add_option("--thin", ergm_thin);
  ergm->add_option("--seed", ergm_seed, "master seed");
  ergm->add_option("--init", ergm_init, "empty | complete | both")
      ->check(CLI::IsMember({"empty", "complete", "both"}));
  ergm->add_option("--output", ergm_output);
  ergm->add_option("--trace-out", ergm_trace_out, "write thinned V_T traces as CSV");

  // ---- census ----
  auto* census = app.add_subcommand("census", "rooted neighborhood censuses");
  std::string census_input, census_er, census_output;
  double census_ugw_lambda = -1.0, census_condition_t = -1.0;
  int census_depth = 1;
  std::uint64_t census_samples = 0, census_seed = 0, census_size_cap = 10000;
  census->add_option("--input", census_input, "edge-list file");
  census->add_option("--er", census_er, "n,lambda: census over sampled G(n,lambda/n)");
  census->add_option("--ugw", census_ugw_lambda, "Poisson Galton-Watson tree census");
  census->add_option("--depth", census_depth)->required();
  census->add_option("--samples", census_samples,
                     "graphs (--er), trees (--ugw), or root sample size (--input; 0 = all)");
  census->add_option("--seed", census_seed, "master seed");
  census->add_option("--condition-T", census_condition_t, "condition sampled graphs on T >= k");
  census->add_option("--size-cap", census_size_cap, "Galton-Watson growth cap");
  census->add_option("--output", census_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (tail->parsed()) {
      const double p = tail_lambda / tail_n;
      const tg_statistic stat = tail_stat == "T" ? TG_STAT_T : TG_STAT_VT;
      tg_tail_estimate est;
      if (tail_method == "exact") {
        if (tail_allow_n8 && tail_n == 8)
          std::cerr << "warning: n=8 enumerates 2^28 graphs; expect minutes\n";
        check(tg_tail_exact(tail_n, p, stat, tail_k, tail_allow_n8, threads, &est));
      } else if (tail_method == "mc") {
        check(tg_tail_mc(tail_n, p, stat, tail_k, tail_samples, tail_seed, threads, &est));
      } else if (tail_method == "is") {
        if (stat != TG_STAT_T)
          throw CliError{kExitValidation, "--method is applies to --stat T only"};
        std::uint32_t r = tail_r;
        if (r == 0) {
          r = 3;
          while (static_cast<double>(r) * (r - 1) * (r - 2) / 6.0 < tail_k && r < 6) ++r;
        }
        check(tg_tail_is_clique(tail_n, p, tail_k, r, tail_samples, tail_seed, threads, &est));
      } else {  // analytic
        if (stat == TG_STAT_T) {
          check(tg_tail_clique_lower_bound(tail_n, p, tail_k, &est));
        } else {
          check(tg_tail_disjoint_triangles(tail_n, p, static_cast<std::uint64_t>(tail_k),
                                           tail_lambda, &est));
        }
      }
      std::ostringstream out;
      const bool stochastic = tail_method == "mc" || tail_method == "is";
      if (stochastic) out << seed_header(tail_seed, "0..15");
      out << "stat,k,method,log_p,stderr,lower_bound_flag,samples,seed\n" << tail_csv_row(est);
      emit(tail_output, out.str());
      return kExitOk;
    }

    if (phi->parsed()) {
      if (!phi_exact_flag && !phi_bounds_flag) phi_bounds_flag = true;
      if (phi_log_base < 0 || phi_log_base == 1.0)
        throw CliError{kExitValidation, "phi: --log-base must be positive and not 1"};
      const double scale = phi_log_base > 0 ? std::log(phi_log_base) : 1.0;
      std::ostringstream out;
      out << "method,value,edges,witness_file\n";
      auto witness_row = [&](const char* name, const tg_phi_result& result, tg_graph* witness) {
        std::string file;
        if (witness && !phi_witness_prefix.empty()) {
          file = phi_witness_prefix + name + ".edges";
          check(tg_graph_write(witness, file.c_str()));
        }
        out << name << ',' << fmt(result.value / scale) << ',' << result.witness_edges << ','
            << file << '\n';
        if (witness) tg_graph_free(witness);
      };
      if (phi_bounds_flag) {
        tg_phi_result upper, lower;
        tg_graph* witness = nullptr;
        check(tg_phi_clique_upper(phi_n, phi_p, phi_k, phi_a, phi_w, &upper, &witness));
        witness_row("clique_upper", upper, witness);
        check(tg_phi_edge_lower(phi_n, phi_p, phi_k, phi_a, phi_w, &lower));
        witness_row("edge_lower", lower, nullptr);
      }
      if (phi_exact_flag) {
        tg_phi_result exact;
        tg_graph* witness = nullptr;
        check(tg_phi_exact(phi_n, phi_p, phi_k, phi_a, 6, &exact, &witness));
        witness_row("exact", exact, witness);
      }
      emit(phi_output, out.str());
      return kExitOk;
    }

    if (core->parsed()) {
      tg_graph* g = nullptr;
      check(tg_graph_read(core_input.c_str(), &g));
      tg_core_params params;
      params.a = core_a;
      params.k = core_k;
      params.w = core_w;
      params.C = core_c;
      params.n = tg_graph_vertex_count(g);
      params.lambda = core_lambda;
      char* json = nullptr;
      const tg_status status = tg_core_certificate_json(g, &params, &json);
      tg_graph_free(g);
      check(status);
      std::string payload(json);
      tg_string_free(json);
      emit(core_output, payload + "\n");
      return kExitOk;
    }

    if (qbasic->parsed()) {
      tg_graph* g = nullptr;
      check(tg_graph_read(qbasic_input.c_str(), &g));
      tg_graph* basic = nullptr;
      tg_status status = tg_extract_qbasic(g, &basic);
      tg_graph_free(g);
      check(status);
      char* json = nullptr;
      status = tg_qbasic_decomposition_json(basic, &json);
      tg_graph_free(basic);
      check(status);
      std::string payload(json);
      tg_string_free(json);
      emit(qbasic_output, payload + "\n");
      return kExitOk;
    }

    if (ergm->parsed()) {
      std::vector<double> betas = ergm_grid;
      if (ergm_beta >= 0) betas.push_back(ergm_beta);
      if (betas.empty())
        throw CliError{kExitValidation, "ergm: provide --beta or --beta-grid"};
      const bool paired = ergm_init == "both";
      const std::size_t rows_per_beta = paired ? 2 : 1;
      std::vector<tg_ergm_sweep_row> rows(betas.size() * rows_per_beta);
      if (paired) {
        check(tg_ergm_sweep(ergm_n, ergm_lambda, betas.data(), betas.size(), ergm_steps,
                            ergm_burnin, ergm_thin, ergm_seed, 1, 0.15, threads, rows.data()));
      } else {
        // Single-init sweep: run chains directly so --init picks the start.
        for (std::size_t i = 0; i < betas.size(); ++i) {
          tg_ergm_config config;
          config.n = ergm_n;
          config.lambda = ergm_lambda;
          config.beta = betas[i];
          config.steps = ergm_steps;
          config.burn_in = ergm_burnin;
          config.thin = ergm_thin;
          config.seed = ergm_seed + i;
          config.init_complete = ergm_init == "complete";
          tg_ergm_trace* trace = nullptr;
          check(tg_ergm_run(&config, &trace));
          rows[i].beta = betas[i];
          rows[i].init_complete = config.init_complete;
          rows[i].mean_vt_fraction = tg_ergm_trace_mean_vt(trace) / ergm_n;
          rows[i].stderr_fraction = tg_ergm_trace_stderr_vt(trace) / ergm_n;
          rows[i].acceptance_rate = tg_ergm_trace_acceptance(trace);
          rows[i].mixing_warning = 0;
          if (!ergm_trace_out.empty()) {
            std::ostringstream trace_csv;
            trace_csv << seed_header(ergm_seed, std::to_string(i));
            trace_csv << "step_index,vt\n";
            for (std::uint64_t t = 0; t < tg_ergm_trace_len(trace); ++t)
              trace_csv << t << ',' << tg_ergm_trace_vt(trace, t) << '\n';
            emit(ergm_trace_out + "." + fmt(betas[i]) + ".csv", trace_csv.str());
          }
          tg_ergm_trace_free(trace);
        }
      }
      std::ostringstream out;
      out << seed_header(ergm_seed, "per (beta,init) chain");
      out << "beta,init,mean_vt_over_n,stderr,acceptance,mixing_warning\n";
      for (const auto& row : rows)
        out << fmt(row.beta) << ',' << (row.init_complete ? "complete" : "empty") << ','
            << fmt(row.mean_vt_fraction) << ',' << fmt(row.stderr_fraction) << ','
            << fmt(row.acceptance_rate) << ',' << row.mixing_warning << '\n';
      emit(ergm_output, out.str());
      return kExitOk;
    }

    if (census->parsed()) {
      const int sources = (!census_input.empty()) + (!census_er.empty()) +
                          (census_ugw_lambda >= 0);
      if (sources != 1)
        throw CliError{kExitValidation, "census: provide exactly one of --input, --er, --ugw"};
      if (census_condition_t >= 0 && census_er.empty())
        throw CliError{kExitValidation, "census: --condition-T applies to --er only"};
      if (census_input.empty() && census_samples == 0)
        throw CliError{kExitValidation, "census: --samples is required with --er and --ugw"};
      tg_census* result = nullptr;
      if (!census_input.empty()) {
        tg_graph* g = nullptr;
        check(tg_graph_read(census_input.c_str(), &g));
        const tg_status status =
            tg_census_graph(g, census_depth, census_samples, census_seed, &result);
        tg_graph_free(g);
        check(status);
      } else if (!census_er.empty()) {
        const auto comma = census_er.find(',');
        std::uint32_t n = 0;
        double lambda = 0.0;
        try {
          if (comma == std::string::npos) throw std::invalid_argument("missing comma");
          n = static_cast<std::uint32_t>(std::stoul(census_er.substr(0, comma)));
          lambda = std::stod(census_er.substr(comma + 1));
        } catch (const std::exception&) {
          throw CliError{kExitValidation, "census: --er expects n,lambda"};
        }
        check(tg_census_er(n, lambda, census_samples, census_depth, census_seed,
                           census_condition_t, 1000000, &result));
      } else {
        check(tg_census_ugw(census_ugw_lambda, census_depth, census_samples, census_seed,
                            census_size_cap, &result));
      }
      char* json = nullptr;
      const tg_status status = tg_census_json(result, &json);
      tg_census_free(result);
      check(status);
      std::string payload(json);
      tg_string_free(json);
      emit(census_output, payload + "\n");
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
