#include "lgldpc.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "lgldpc/builders.hpp"
#include "lgldpc/density_evolution.hpp"
#include "lgldpc/erasure_sim.hpp"
#include "lgldpc/error.hpp"
#include "lgldpc/reports.hpp"
#include "lgldpc/secrecy.hpp"
#include "lgldpc/tanner.hpp"

using namespace lgldpc;

struct lgldpc_tanner {
  TannerGraph graph;
};

struct lgldpc_ddp {
  DegreeDistributionPair ddp;
};

namespace {

thread_local std::string t_last_error;

lgldpc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return LGLDPC_ERR_INVALID_ARGUMENT;
    case ErrorCode::unsupported_modulus: return LGLDPC_ERR_UNSUPPORTED_MODULUS;
    case ErrorCode::unsupported_prime: return LGLDPC_ERR_UNSUPPORTED_PRIME;
    case ErrorCode::unsupported_degree_profile: return LGLDPC_ERR_UNSUPPORTED_DEGREE_PROFILE;
    case ErrorCode::search_exhausted: return LGLDPC_ERR_SEARCH_EXHAUSTED;
    case ErrorCode::invalid_parameters: return LGLDPC_ERR_INVALID_PARAMETERS;
    case ErrorCode::internal_inconsistency: return LGLDPC_ERR_INTERNAL;
    case ErrorCode::invalid_plan: return LGLDPC_ERR_INVALID_PLAN;
    case ErrorCode::invalid_factor: return LGLDPC_ERR_INVALID_FACTOR;
    case ErrorCode::invalid_ddp: return LGLDPC_ERR_INVALID_DDP;
    case ErrorCode::unsupported_ddp: return LGLDPC_ERR_UNSUPPORTED_DDP;
    case ErrorCode::supercritical_epsilon: return LGLDPC_ERR_SUPERCRITICAL_EPSILON;
    case ErrorCode::girth_budget_exceeded: return LGLDPC_ERR_GIRTH_BUDGET_EXCEEDED;
    case ErrorCode::size_limit: return LGLDPC_ERR_SIZE_LIMIT;
    case ErrorCode::parse_error: return LGLDPC_ERR_PARSE;
    case ErrorCode::validation_error: return LGLDPC_ERR_VALIDATION;
    case ErrorCode::io_error: return LGLDPC_ERR_IO;
  }
  return LGLDPC_ERR_UNKNOWN;
}

template <typename Fn>
lgldpc_status guarded(Fn&& fn) {
  try {
    t_last_error.clear();
    fn();
    return LGLDPC_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return LGLDPC_ERR_UNKNOWN;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LGLDPC_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

QChoice qchoice_of(uint64_t q, uint64_t min_n) {
  return q > 0 ? QChoice::q(q) : QChoice::min_block(min_n);
}

SplitMode mode_of(int mode) {
  if (mode != 0 && mode != 1) raise(ErrorCode::invalid_argument, "mode must be 0 or 1");
  return mode == 0 ? SplitMode::deterministic : SplitMode::random;
}

std::string finish_metadata(BuildMetadata meta, const TannerGraph& tg, bool measure_girth) {
  if (measure_girth) {
    GirthReport gr = girth(tg.to_graph());
    if (!gr.acyclic()) meta.girth_measured = gr.girth;
  }
  return metadata_json(meta);
}

void require(const void* p, const char* what) {
  if (p == nullptr) raise(ErrorCode::invalid_argument, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* lgldpc_version(void) { return "0.1.0"; }

const char* lgldpc_status_name(int status) {
  switch (status) {
    case LGLDPC_OK: return "ok";
    case LGLDPC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case LGLDPC_ERR_UNSUPPORTED_MODULUS: return "unsupported-modulus";
    case LGLDPC_ERR_UNSUPPORTED_PRIME: return "unsupported-prime";
    case LGLDPC_ERR_UNSUPPORTED_DEGREE_PROFILE: return "unsupported-degree-profile";
    case LGLDPC_ERR_SEARCH_EXHAUSTED: return "search-exhausted";
    case LGLDPC_ERR_INVALID_PARAMETERS: return "invalid-parameters";
    case LGLDPC_ERR_INTERNAL: return "internal-inconsistency";
    case LGLDPC_ERR_INVALID_PLAN: return "invalid-plan";
    case LGLDPC_ERR_INVALID_FACTOR: return "invalid-factor";
    case LGLDPC_ERR_INVALID_DDP: return "invalid-ddp";
    case LGLDPC_ERR_UNSUPPORTED_DDP: return "unsupported-ddp";
    case LGLDPC_ERR_SUPERCRITICAL_EPSILON: return "supercritical-epsilon";
    case LGLDPC_ERR_GIRTH_BUDGET_EXCEEDED: return "girth-budget-exceeded";
    case LGLDPC_ERR_SIZE_LIMIT: return "size-limit";
    case LGLDPC_ERR_PARSE: return "parse-error";
    case LGLDPC_ERR_VALIDATION: return "validation-error";
    case LGLDPC_ERR_IO: return "io-error";
    default: return "unknown";
  }
}

const char* lgldpc_last_error(void) { return t_last_error.c_str(); }

void lgldpc_string_free(char* s) { delete[] s; }

lgldpc_status lgldpc_ddp_parse(const char* text, lgldpc_ddp** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new lgldpc_ddp{DegreeDistributionPair::parse(text)};
  });
}

lgldpc_status lgldpc_ddp_regular(unsigned c, unsigned d, lgldpc_ddp** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lgldpc_ddp{DegreeDistributionPair::regular(c, d)};
  });
}

void lgldpc_ddp_free(lgldpc_ddp* ddp) { delete ddp; }

lgldpc_status lgldpc_ddp_design_rate(const lgldpc_ddp* ddp, double* out) {
  return guarded([&] {
    require(ddp, "ddp");
    require(out, "out");
    *out = ddp->ddp.design_rate().to_double();
  });
}

lgldpc_status lgldpc_ddp_json(const lgldpc_ddp* ddp, char** json_out) {
  return guarded([&] {
    require(ddp, "ddp");
    require(json_out, "json_out");
    *json_out = dup_string(ddp_json(ddp->ddp));
  });
}

lgldpc_status lgldpc_build_k_regular(unsigned k, uint64_t q, uint64_t min_n, int mode,
                                     uint64_t seed, int measure_girth, lgldpc_tanner** out,
                                     char** metadata_json_out) {
  return guarded([&] {
    require(out, "out");
    RegularBuild build = build_k_regular(k, qchoice_of(q, min_n), mode_of(mode), seed);
    TannerGraph tg = bipartite_to_tanner(build.graph, build.side);
    std::string meta = finish_metadata(build.metadata, tg, measure_girth != 0);
    *out = new lgldpc_tanner{std::move(tg)};
    if (metadata_json_out) *metadata_json_out = dup_string(meta);
  });
}

lgldpc_status lgldpc_build_cd_regular(unsigned c, unsigned d, uint64_t q, uint64_t min_n,
                                      int mode, uint64_t seed, int measure_girth,
                                      lgldpc_tanner** out, char** metadata_json_out) {
  return guarded([&] {
    require(out, "out");
    TannerBuild build = build_cd_regular(c, d, qchoice_of(q, min_n), mode_of(mode), seed);
    std::string meta = finish_metadata(build.metadata, build.graph, measure_girth != 0);
    *out = new lgldpc_tanner{std::move(build.graph)};
    if (metadata_json_out) *metadata_json_out = dup_string(meta);
  });
}

lgldpc_status lgldpc_build_irregular(const lgldpc_ddp* ddp, uint64_t q, uint64_t min_n,
                                     uint64_t seed, int measure_girth, lgldpc_tanner** out,
                                     char** metadata_json_out) {
  return guarded([&] {
    require(ddp, "ddp");
    require(out, "out");
    TannerBuild build = build_irregular(ddp->ddp, qchoice_of(q, min_n), seed);
    std::string meta = finish_metadata(build.metadata, build.graph, measure_girth != 0);
    *out = new lgldpc_tanner{std::move(build.graph)};
    if (metadata_json_out) *metadata_json_out = dup_string(meta);
  });
}

lgldpc_status lgldpc_tanner_read_alist(const char* path, lgldpc_tanner** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new lgldpc_tanner{read_alist_file(path)};
  });
}

lgldpc_status lgldpc_tanner_write_alist(const lgldpc_tanner* tg, const char* path) {
  return guarded([&] {
    require(tg, "tanner");
    require(path, "path");
    write_alist_file(tg->graph, path);
  });
}

lgldpc_status lgldpc_tanner_dims(const lgldpc_tanner* tg, uint64_t* n, uint64_t* m,
                                 uint64_t* edges) {
  return guarded([&] {
    require(tg, "tanner");
    if (n) *n = tg->graph.variable_count();
    if (m) *m = tg->graph.check_count();
    if (edges) *edges = tg->graph.edge_count();
  });
}

lgldpc_status lgldpc_tanner_girth(const lgldpc_tanner* tg, int64_t* girth_out) {
  return guarded([&] {
    require(tg, "tanner");
    require(girth_out, "girth_out");
    GirthReport gr = girth(tg->graph.to_graph());
    *girth_out = gr.acyclic() ? -1 : static_cast<int64_t>(*gr.girth);
  });
}

lgldpc_status lgldpc_tanner_girth_json(const lgldpc_tanner* tg, int with_witness,
                                       char** json_out) {
  return guarded([&] {
    require(tg, "tanner");
    require(json_out, "json_out");
    GirthReport gr = girth(tg->graph.to_graph());
    *json_out = dup_string(girth_json(gr, with_witness != 0));
  });
}

void lgldpc_tanner_free(lgldpc_tanner* tg) { delete tg; }

lgldpc_status lgldpc_de_threshold(const lgldpc_ddp* ddp, double tol, double* out) {
  return guarded([&] {
    require(ddp, "ddp");
    require(out, "out");
    *out = threshold(ddp->ddp, tol);
  });
}

lgldpc_status lgldpc_de_trace_json(const lgldpc_ddp* ddp, double epsilon, uint64_t t_max,
                                   double tol, char** json_out) {
  return guarded([&] {
    require(ddp, "ddp");
    require(json_out, "json_out");
    *json_out = dup_string(de_trace_json(de_trace(ddp->ddp, epsilon, t_max, tol)));
  });
}

lgldpc_status lgldpc_de_decay_json(const lgldpc_ddp* ddp, double epsilon, char** json_out) {
  return guarded([&] {
    require(ddp, "ddp");
    require(json_out, "json_out");
    *json_out = dup_string(decay_json(decay_constants(ddp->ddp, epsilon)));
  });
}

lgldpc_status lgldpc_de_certificate_json(const lgldpc_ddp* ddp, double xi, double a_budget,
                                         char** json_out) {
  return guarded([&] {
    require(ddp, "ddp");
    require(json_out, "json_out");
    *json_out = dup_string(certificate_json(secrecy_certificate(ddp->ddp, xi, a_budget)));
  });
}

lgldpc_status lgldpc_simulate(const lgldpc_tanner* tg, double epsilon, int64_t iters,
                              uint64_t trials, uint64_t seed, unsigned workers,
                              lgldpc_trial_report* out) {
  return guarded([&] {
    require(tg, "tanner");
    require(out, "out");
    std::optional<std::uint32_t> cap;
    if (iters >= 0) cap = static_cast<std::uint32_t>(iters);
    TrialReport r = simulate(tg->graph, epsilon, cap, trials, seed, workers);
    *out = {r.trials,
            r.iters_cap ? static_cast<int64_t>(*r.iters_cap) : -1,
            r.epsilon,
            r.bit_rate,
            r.bit_ci.lo,
            r.bit_ci.hi,
            r.block_rate,
            r.block_ci.lo,
            r.block_ci.hi,
            r.bit_samples,
            r.bit_erasures,
            r.block_errors,
            r.seed};
  });
}

lgldpc_status lgldpc_simulate_csv(const lgldpc_trial_report* report, char** csv_row) {
  return guarded([&] {
    require(report, "report");
    require(csv_row, "csv_row");
    TrialReport r;
    r.trials = report->trials;
    if (report->iters >= 0) r.iters_cap = static_cast<std::uint32_t>(report->iters);
    r.epsilon = report->epsilon;
    r.bit_rate = report->bit_rate;
    r.bit_ci = {report->bit_lo, report->bit_hi};
    r.block_rate = report->block_rate;
    r.block_ci = {report->block_lo, report->block_hi};
    r.bit_samples = report->bit_samples;
    r.bit_erasures = report->bit_erasures;
    r.block_errors = report->block_errors;
    r.seed = report->seed;
    *csv_row = dup_string(trial_report_csv_row(r));
  });
}

lgldpc_status lgldpc_secrecy_report_json(const lgldpc_tanner* tg, double xi, uint64_t trials,
                                         uint64_t seed, unsigned workers, int with_exact,
                                         char** json_out) {
  return guarded([&] {
    require(tg, "tanner");
    require(json_out, "json_out");
    SecrecyReport report =
        make_secrecy_report(tg->graph, xi, trials, seed, workers, with_exact != 0);
    *json_out = dup_string(secrecy_report_json(report));
  });
}

lgldpc_status lgldpc_exact_leakage(const lgldpc_tanner* tg, double xi, uint64_t sample_trials,
                                   uint64_t seed, unsigned workers, double* bits_out) {
  return guarded([&] {
    require(tg, "tanner");
    require(bits_out, "bits_out");
    CosetCode code = CosetCode::from_tanner(tg->graph);
    *bits_out = sample_trials == 0 ? exact_leakage(code, xi)
                                   : exact_leakage_sampled(code, xi, sample_trials, seed, workers);
  });
}

}  // extern "C"
