// lgldpc command line: construction, density evolution, erasure simulation
// and wiretap secrecy reports. Talks to the library strictly through the
// C API in lgldpc.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgldpc.h"

namespace {

struct CliError {
  int exit_code;
  std::string code_name;
  std::string message;
};

int exit_code_for(lgldpc_status status, bool from_file) {
  switch (status) {
    case LGLDPC_OK: return 0;
    case LGLDPC_ERR_INVALID_ARGUMENT:
    case LGLDPC_ERR_INVALID_DDP: return 2;
    case LGLDPC_ERR_PARSE:
    case LGLDPC_ERR_VALIDATION: return from_file ? 5 : 2;
    case LGLDPC_ERR_UNSUPPORTED_MODULUS:
    case LGLDPC_ERR_UNSUPPORTED_PRIME:
    case LGLDPC_ERR_UNSUPPORTED_DEGREE_PROFILE:
    case LGLDPC_ERR_UNSUPPORTED_DDP: return 3;
    case LGLDPC_ERR_SEARCH_EXHAUSTED:
    case LGLDPC_ERR_INVALID_PARAMETERS:
    case LGLDPC_ERR_INVALID_PLAN:
    case LGLDPC_ERR_INVALID_FACTOR:
    case LGLDPC_ERR_SUPERCRITICAL_EPSILON:
    case LGLDPC_ERR_GIRTH_BUDGET_EXCEEDED:
    case LGLDPC_ERR_SIZE_LIMIT: return 4;
    case LGLDPC_ERR_IO: return 5;
    default: return 1;
  }
}

void check(lgldpc_status status, bool from_file = false) {
  if (status == LGLDPC_OK) return;
  throw CliError{exit_code_for(status, from_file), lgldpc_status_name(status),
                 lgldpc_last_error()};
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lgldpc_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{5, "io-error", "cannot open for writing: " + out_path};
  out << text << '\n';
  if (!out.flush()) throw CliError{5, "io-error", "write failed: " + out_path};
}

struct TannerHandle {
  lgldpc_tanner* ptr = nullptr;
  ~TannerHandle() { lgldpc_tanner_free(ptr); }
};

struct DdpHandle {
  lgldpc_ddp* ptr = nullptr;
  ~DdpHandle() { lgldpc_ddp_free(ptr); }
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"large-girth LDPC construction and erasure-wiretap analysis"};
  app.require_subcommand(1);
  app.set_config("--config", "", "defaults file (key=value per line); flags override");
  bool error_json = false;
  app.add_flag("--error-json", error_json, "emit failures as machine-readable JSON on stdout");

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build a large-girth graph, write alist + metadata");
  std::vector<unsigned> regular_cd;
  std::string ddp_text;
  unsigned k_regular = 0;
  std::uint64_t opt_q = 0, min_n = 0;
  std::string mode = "deterministic";
  std::optional<std::uint64_t> seed;
  std::string out_base;
  bool measure_girth = false;
  construct->add_option("--regular", regular_cd, "variable and check degrees c d")->expected(2);
  construct->add_option("--ddp", ddp_text, "degree distribution pair, e.g. \"l:3=0.5,5=0.5;r:15=1\"");
  construct->add_option("--k-regular", k_regular, "single degree k (bipartite k-regular output)");
  construct->add_option("--q", opt_q, "explicit prime q (= 1 mod 4, > 2*sqrt(p))");
  construct->add_option("--min-n", min_n, "pick the smallest q reaching this block length");
  construct->add_option("--mode", mode, "deterministic | random")
      ->check(CLI::IsMember({"deterministic", "random"}));
  construct->add_option("--seed", seed, "64-bit seed (required for ddp builds and random mode)");
  construct->add_option("--out", out_base, "output basename (writes BASE.alist and BASE.json)")
      ->required();
  construct->add_flag("--measure-girth", measure_girth, "run the girth BFS and record it");

  // ---- de ----
  auto* de = app.add_subcommand("de", "density evolution: trace, threshold, decay, certificate");
  std::string de_ddp;
  bool de_threshold = false, de_trace = false, de_decay = false, de_cert = false;
  double de_epsilon = -1.0, de_xi = -1.0, de_tol = 1e-4, de_trace_tol = 1e-10, a_budget = 3.0;
  std::uint64_t de_iters = 1000;
  std::string de_out;
  de->add_option("--ddp", de_ddp, "degree distribution pair")->required();
  de->add_flag("--threshold", de_threshold, "bisect the BEC threshold");
  de->add_flag("--trace", de_trace, "run the x_t/y_t recursion");
  de->add_flag("--decay", de_decay, "double-exponential decay constants");
  de->add_flag("--certificate", de_cert, "strong-secrecy certificate");
  de->add_option("--epsilon", de_epsilon, "channel erasure probability (trace/decay)");
  de->add_option("--xi", de_xi, "eavesdropper erasure probability (certificate)");
  de->add_option("--tol", de_tol, "threshold bisection tolerance");
  de->add_option("--trace-tol", de_trace_tol, "trace convergence tolerance");
  de->add_option("--iters", de_iters, "trace iteration cap");
  de->add_option("--girth-budget-a", a_budget, "schedule constant a before clamping");
  de->add_option("--out", de_out, "write JSON here instead of stdout");

  // ---- simulate ----
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo peeling over the BEC, CSV output");
  std::string sim_in, sim_out;
  std::vector<double> sim_eps;
  std::int64_t sim_iters = -1;
  std::uint64_t sim_trials = 0;
  std::optional<std::uint64_t> sim_seed;
  unsigned sim_workers = 1;
  simulate->add_option("--in", sim_in, "alist file")->required();
  simulate->add_option("--epsilon", sim_eps, "erasure probability (repeatable for a sweep)")
      ->required();
  simulate->add_option("--iters", sim_iters, "iteration cap, -1 = run to the stopping set");
  simulate->add_option("--trials", sim_trials, "number of trials")->required();
  simulate->add_option("--seed", sim_seed, "64-bit seed");
  simulate->add_option("--workers", sim_workers, "parallel workers (result is worker-count independent)");
  simulate->add_option("--out", sim_out, "write CSV here instead of stdout");

  // ---- secrecy ----
  auto* secrecy = app.add_subcommand("secrecy", "coset-scheme leakage bound from a block-error estimate");
  std::vector<std::string> sec_in;
  double sec_xi = -1.0;
  std::uint64_t sec_trials = 0;
  std::optional<std::uint64_t> sec_seed;
  unsigned sec_workers = 1;
  bool sec_exact = false;
  std::string sec_out;
  secrecy->add_option("--in", sec_in, "alist file (repeatable for a sweep)")->required();
  secrecy->add_option("--xi", sec_xi, "eavesdropper erasure probability")->required();
  secrecy->add_option("--trials", sec_trials, "Monte Carlo trials for P_B")->required();
  secrecy->add_option("--seed", sec_seed, "64-bit seed");
  secrecy->add_option("--workers", sec_workers, "parallel workers");
  secrecy->add_flag("--with-exact", sec_exact, "also run the exhaustive leakage oracle (n <= 25)");
  secrecy->add_option("--out", sec_out, "write JSON here instead of stdout");

  // ---- girth ----
  auto* girth_cmd = app.add_subcommand("girth", "exact girth of an alist graph");
  std::string girth_in, girth_out;
  bool girth_witness = false;
  girth_cmd->add_option("--in", girth_in, "alist file")->required();
  girth_cmd->add_flag("--witness", girth_witness, "include a shortest cycle");
  girth_cmd->add_option("--out", girth_out, "write JSON here instead of stdout");

  // ---- leakage-exact ----
  auto* leak = app.add_subcommand("leakage-exact", "information leaked to the eavesdropper, exact oracle");
  std::string leak_in, leak_out;
  double leak_xi = -1.0;
  std::uint64_t leak_sampled = 0;
  std::optional<std::uint64_t> leak_seed;
  unsigned leak_workers = 1;
  leak->add_option("--in", leak_in, "alist file")->required();
  leak->add_option("--xi", leak_xi, "eavesdropper erasure probability")->required();
  leak->add_option("--sampled", leak_sampled, "Monte Carlo patterns instead of exhaustive (0 = exhaustive)");
  leak->add_option("--seed", leak_seed, "64-bit seed (required with --sampled)");
  leak->add_option("--workers", leak_workers, "parallel workers for sampled mode");
  leak->add_option("--out", leak_out, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    if (error_json)
      std::cout << "{\"error\":{\"code\":\"usage\",\"status\":2,\"message\":\""
                << json_escape(e.what()) << "\"}}\n";
    return 2;
  }

  try {
    if (construct->parsed()) {
      int picked = (!regular_cd.empty()) + (!ddp_text.empty()) + (k_regular != 0);
      if (picked != 1)
        throw CliError{2, "usage", "choose exactly one of --regular, --ddp, --k-regular"};
      if (opt_q == 0 && min_n == 0)
        throw CliError{2, "usage", "one of --q or --min-n is required"};
      bool random_mode = mode == "random";
      if ((random_mode || !ddp_text.empty()) && !seed)
        throw CliError{2, "usage", "--seed is required for randomized builds"};

      TannerHandle tg;
      char* meta = nullptr;
      if (!regular_cd.empty()) {
        check(lgldpc_build_cd_regular(regular_cd[0], regular_cd[1], opt_q, min_n, random_mode,
                                      seed.value_or(0), measure_girth, &tg.ptr, &meta));
      } else if (k_regular != 0) {
        check(lgldpc_build_k_regular(k_regular, opt_q, min_n, random_mode, seed.value_or(0),
                                     measure_girth, &tg.ptr, &meta));
      } else {
        DdpHandle ddp;
        check(lgldpc_ddp_parse(ddp_text.c_str(), &ddp.ptr));
        check(lgldpc_build_irregular(ddp.ptr, opt_q, min_n, *seed, measure_girth, &tg.ptr, &meta));
      }
      std::string metadata = take_string(meta);
      std::string alist_path = out_base + ".alist";
      std::string json_path = out_base + ".json";
      check(lgldpc_tanner_write_alist(tg.ptr, alist_path.c_str()), true);
      emit(metadata, json_path);
      std::cout << "wrote " << alist_path << '\n' << "wrote " << json_path << '\n';
    } else if (de->parsed()) {
      int picked = de_threshold + de_trace + de_decay + de_cert;
      if (picked != 1)
        throw CliError{2, "usage",
                       "choose exactly one of --threshold, --trace, --decay, --certificate"};
      DdpHandle ddp;
      check(lgldpc_ddp_parse(de_ddp.c_str(), &ddp.ptr));
      if (de_threshold) {
        double th = 0.0;
        check(lgldpc_de_threshold(ddp.ptr, de_tol, &th));
        char buf[128];
        std::snprintf(buf, sizeof buf, "{\"epsilon_th\":%.12g,\"tol\":%.12g}", th, de_tol);
        emit(buf, de_out);
      } else if (de_trace) {
        if (de_epsilon < 0) throw CliError{2, "usage", "--trace needs --epsilon"};
        char* json = nullptr;
        check(lgldpc_de_trace_json(ddp.ptr, de_epsilon, de_iters, de_trace_tol, &json));
        emit(take_string(json), de_out);
      } else if (de_decay) {
        if (de_epsilon < 0) throw CliError{2, "usage", "--decay needs --epsilon"};
        char* json = nullptr;
        check(lgldpc_de_decay_json(ddp.ptr, de_epsilon, &json));
        emit(take_string(json), de_out);
      } else {
        if (de_xi < 0) throw CliError{2, "usage", "--certificate needs --xi"};
        char* json = nullptr;
        check(lgldpc_de_certificate_json(ddp.ptr, de_xi, a_budget, &json));
        emit(take_string(json), de_out);
      }
    } else if (simulate->parsed()) {
      if (!sim_seed) throw CliError{2, "usage", "--seed is required"};
      TannerHandle tg;
      check(lgldpc_tanner_read_alist(sim_in.c_str(), &tg.ptr), true);
      std::string csv = "epsilon,t,trials,bit_rate,bit_lo,bit_hi,block_rate,block_lo,block_hi,seed";
      for (double eps : sim_eps) {
        lgldpc_trial_report report;
        check(lgldpc_simulate(tg.ptr, eps, sim_iters, sim_trials, *sim_seed, sim_workers, &report));
        char* row = nullptr;
        check(lgldpc_simulate_csv(&report, &row));
        csv += '\n' + take_string(row);
      }
      emit(csv, sim_out);
    } else if (secrecy->parsed()) {
      if (!sec_seed) throw CliError{2, "usage", "--seed is required"};
      std::string json;
      for (const std::string& path : sec_in) {
        TannerHandle tg;
        check(lgldpc_tanner_read_alist(path.c_str(), &tg.ptr), true);
        char* report = nullptr;
        check(lgldpc_secrecy_report_json(tg.ptr, sec_xi, sec_trials, *sec_seed, sec_workers,
                                         sec_exact, &report));
        std::string entry = "{\"file\":\"" + json_escape(path) + "\",\"report\":" +
                            take_string(report) + "}";
        json += json.empty() ? entry : "," + entry;
      }
      if (sec_in.size() > 1) json = "[" + json + "]";
      emit(json, sec_out);
    } else if (girth_cmd->parsed()) {
      TannerHandle tg;
      check(lgldpc_tanner_read_alist(girth_in.c_str(), &tg.ptr), true);
      char* json = nullptr;
      check(lgldpc_tanner_girth_json(tg.ptr, girth_witness, &json));
      emit(take_string(json), girth_out);
    } else if (leak->parsed()) {
      if (leak_sampled > 0 && !leak_seed)
        throw CliError{2, "usage", "--seed is required with --sampled"};
      TannerHandle tg;
      check(lgldpc_tanner_read_alist(leak_in.c_str(), &tg.ptr), true);
      double bits = 0.0;
      check(lgldpc_exact_leakage(tg.ptr, leak_xi, leak_sampled, leak_seed.value_or(0),
                                 leak_workers, &bits));
      uint64_t n = 0, m = 0;
      check(lgldpc_tanner_dims(tg.ptr, &n, &m, nullptr));
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "{\"n\":%llu,\"xi\":%.12g,\"mode\":\"%s\",\"exact_leakage_bits\":%.12g}",
                    static_cast<unsigned long long>(n), leak_xi,
                    leak_sampled == 0 ? "exhaustive" : "sampled", bits);
      emit(buf, leak_out);
    }
  } catch (const CliError& e) {
    std::cerr << "error (" << e.code_name << "): " << e.message << '\n';
    if (error_json)
      std::cout << "{\"error\":{\"code\":\"" << e.code_name << "\",\"status\":" << e.exit_code
                << ",\"message\":\"" << json_escape(e.message) << "\"}}\n";
    return e.exit_code;
  }
  return 0;
}
