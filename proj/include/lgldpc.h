/*
 * lgldpc - large-girth LDPC construction and erasure-wiretap analysis.
 *
 * C API of the shared library. All handles are opaque; every function
 * returns an lgldpc_status (LGLDPC_OK on success) and reports results
 * through out-parameters. On failure a thread-local message is available
 * via lgldpc_last_error(). Strings returned through char** out-parameters
 * are heap-allocated and must be released with lgldpc_string_free().
 */
#ifndef LGLDPC_H
#define LGLDPC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lgldpc_status {
  LGLDPC_OK = 0,
  LGLDPC_ERR_INVALID_ARGUMENT = 1,
  LGLDPC_ERR_UNSUPPORTED_MODULUS = 2,
  LGLDPC_ERR_UNSUPPORTED_PRIME = 3,
  LGLDPC_ERR_UNSUPPORTED_DEGREE_PROFILE = 4,
  LGLDPC_ERR_SEARCH_EXHAUSTED = 5,
  LGLDPC_ERR_INVALID_PARAMETERS = 6,
  LGLDPC_ERR_INTERNAL = 7,
  LGLDPC_ERR_INVALID_PLAN = 8,
  LGLDPC_ERR_INVALID_FACTOR = 9,
  LGLDPC_ERR_INVALID_DDP = 10,
  LGLDPC_ERR_UNSUPPORTED_DDP = 11,
  LGLDPC_ERR_SUPERCRITICAL_EPSILON = 12,
  LGLDPC_ERR_GIRTH_BUDGET_EXCEEDED = 13,
  LGLDPC_ERR_SIZE_LIMIT = 14,
  LGLDPC_ERR_PARSE = 15,
  LGLDPC_ERR_VALIDATION = 16,
  LGLDPC_ERR_IO = 17,
  LGLDPC_ERR_UNKNOWN = 99
} lgldpc_status;

typedef struct lgldpc_tanner lgldpc_tanner;
typedef struct lgldpc_ddp lgldpc_ddp;

const char* lgldpc_version(void);
const char* lgldpc_status_name(int status);
/* Message of the most recent failure on this thread; empty string if none. */
const char* lgldpc_last_error(void);
void lgldpc_string_free(char* s);

/* --- degree distribution pairs -------------------------------------- */

/* Text form "l:3=0.5,5=0.5;r:15=1": node degrees mapped to edge fractions
 * (decimals or a/b). "L:" instead of "l:" marks node-perspective variable
 * fractions. */
lgldpc_status lgldpc_ddp_parse(const char* text, lgldpc_ddp** out);
lgldpc_status lgldpc_ddp_regular(unsigned c, unsigned d, lgldpc_ddp** out);
void lgldpc_ddp_free(lgldpc_ddp* ddp);
lgldpc_status lgldpc_ddp_design_rate(const lgldpc_ddp* ddp, double* out);
lgldpc_status lgldpc_ddp_json(const lgldpc_ddp* ddp, char** json_out);

/* --- construction ---------------------------------------------------- */

/* Pass q > 0 for an explicit modulus, or q = 0 to pick the smallest q whose
 * block length reaches min_n. mode: 0 deterministic, 1 random. When
 * measure_girth is nonzero the metadata gains "girth_measured". The
 * k-regular build is emitted in Tanner form (left side = variables). */
lgldpc_status lgldpc_build_k_regular(unsigned k, uint64_t q, uint64_t min_n, int mode,
                                     uint64_t seed, int measure_girth, lgldpc_tanner** out,
                                     char** metadata_json);
lgldpc_status lgldpc_build_cd_regular(unsigned c, unsigned d, uint64_t q, uint64_t min_n,
                                      int mode, uint64_t seed, int measure_girth,
                                      lgldpc_tanner** out, char** metadata_json);
lgldpc_status lgldpc_build_irregular(const lgldpc_ddp* ddp, uint64_t q, uint64_t min_n,
                                     uint64_t seed, int measure_girth, lgldpc_tanner** out,
                                     char** metadata_json);

/* --- Tanner graphs ---------------------------------------------------- */

lgldpc_status lgldpc_tanner_read_alist(const char* path, lgldpc_tanner** out);
lgldpc_status lgldpc_tanner_write_alist(const lgldpc_tanner* tg, const char* path);
lgldpc_status lgldpc_tanner_dims(const lgldpc_tanner* tg, uint64_t* n, uint64_t* m,
                                 uint64_t* edges);
/* girth_out = -1 encodes an acyclic graph. */
lgldpc_status lgldpc_tanner_girth(const lgldpc_tanner* tg, int64_t* girth_out);
lgldpc_status lgldpc_tanner_girth_json(const lgldpc_tanner* tg, int with_witness, char** json_out);
void lgldpc_tanner_free(lgldpc_tanner* tg);

/* --- density evolution ------------------------------------------------ */

lgldpc_status lgldpc_de_threshold(const lgldpc_ddp* ddp, double tol, double* out);
lgldpc_status lgldpc_de_trace_json(const lgldpc_ddp* ddp, double epsilon, uint64_t t_max,
                                   double tol, char** json_out);
lgldpc_status lgldpc_de_decay_json(const lgldpc_ddp* ddp, double epsilon, char** json_out);
lgldpc_status lgldpc_de_certificate_json(const lgldpc_ddp* ddp, double xi, double a_budget,
                                         char** json_out);

/* --- simulation and secrecy ------------------------------------------- */

typedef struct lgldpc_trial_report {
  uint64_t trials;
  int64_t iters; /* -1 = unbounded */
  double epsilon;
  double bit_rate, bit_lo, bit_hi;
  double block_rate, block_lo, block_hi;
  uint64_t bit_samples, bit_erasures, block_errors;
  uint64_t seed;
} lgldpc_trial_report;

lgldpc_status lgldpc_simulate(const lgldpc_tanner* tg, double epsilon, int64_t iters,
                              uint64_t trials, uint64_t seed, unsigned workers,
                              lgldpc_trial_report* out);
lgldpc_status lgldpc_simulate_csv(const lgldpc_trial_report* report, char** csv_row);

lgldpc_status lgldpc_secrecy_report_json(const lgldpc_tanner* tg, double xi, uint64_t trials,
                                         uint64_t seed, unsigned workers, int with_exact,
                                         char** json_out);
/* sample_trials = 0 runs the exhaustive oracle (n <= 25); workers only
 * affects the sampled mode and never changes the estimate. */
lgldpc_status lgldpc_exact_leakage(const lgldpc_tanner* tg, double xi, uint64_t sample_trials,
                                   uint64_t seed, unsigned workers, double* bits_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LGLDPC_H */
