/*
 * friendjam — reliability/secrecy outage analysis for finite Poisson networks
 * under friendship-based cooperative jamming.
 *
 * C API of the shared library. All fallible calls return a status code and,
 * on failure, write a message into the caller-supplied (err, errcap) buffer
 * (pass NULL/0 to skip). Handles are opaque and single-owner; free them with
 * the matching *_free call.
 */
#ifndef FRIENDJAM_H
#define FRIENDJAM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* status codes */
#define FJ_OK 0
#define FJ_ERR_INVALID 1 /* parse or validation failure, bad arguments */
#define FJ_ERR_NUMERIC 2 /* quadrature did not reach the requested tolerance */

/* Laplace-transform evaluation methods */
#define FJ_METHOD_CLOSED 0  /* closed form, alpha in {2, 4} */
#define FJ_METHOD_NUMERIC 1 /* adaptive quadrature, any alpha >= 2 */

typedef struct fj_config fj_config; /* parameter set (key = value store) */
typedef struct fj_rows fj_rows;     /* sweep result table */

typedef struct {
  uint64_t n_trials;
  uint64_t seed;
  double top_hat, top_ci_lo, top_ci_hi; /* rate + 95% Wilson interval */
  double sop_hat, sop_ci_lo, sop_ci_hi;
} fj_estimates;

typedef struct {
  double top;
  double sop_upper;
  double sop_lower;
  double sop_upper_exponent; /* -ln(1 - sop_upper); finite after saturation */
  double quad_error;
  int method;
} fj_outage_report;

const char* fj_version(void);

/* ---- configuration ------------------------------------------------------ */

fj_config* fj_config_new(void);
void fj_config_free(fj_config* cfg);

/* Load `key = value` lines ('#' comments). Keys: D lambda lambda_e l alpha
 * beta beta_e R1 R2 policy p sweep_axis sweep_values methods n_trials seed. */
int fj_config_load_file(fj_config* cfg, const char* path, char* err, size_t errcap);
int fj_config_load_text(fj_config* cfg, const char* text, char* err, size_t errcap);

/* Override or add one key (checked key name; value checked on use). */
int fj_config_set(fj_config* cfg, const char* key, const char* value, char* err,
                  size_t errcap);

/* Copy the raw value of a key into buf; FJ_ERR_INVALID if the key is unset. */
int fj_config_get(const fj_config* cfg, const char* key, char* buf, size_t bufcap);

/* Full semantic validation of the assembled parameter set. */
int fj_config_validate(const fj_config* cfg, char* err, size_t errcap);

/* 1 when the config carries a sweep (sweep_axis & friends), else 0. */
int fj_config_has_sweep(const fj_config* cfg);

/* ---- analysis ------------------------------------------------------------ */

/* Laplace transform of the jammer interference at observation radius y_norm,
 * argument s >= 0. tol is the relative quadrature tolerance (numeric method). */
int fj_laplace(const fj_config* cfg, double s, double y_norm, int method, double tol,
               double* value, char* err, size_t errcap);

/* -ln L split into LFC and LFA contributions (both >= 0). */
int fj_log_exponent(const fj_config* cfg, double s, double y_norm, int method,
                    double tol, double* lfc_term, double* lfa_term, char* err,
                    size_t errcap);

/* Transmission outage probability plus secrecy outage bounds. */
int fj_outage(const fj_config* cfg, int method, double tol, fj_outage_report* out,
              char* err, size_t errcap);

/* exp(-lambda*pi*R2^2*beta_e/(beta_e+1)); requires policy E with p = 1. */
int fj_far_eaves_intercept_limit(const fj_config* cfg, double* value, char* err,
                                 size_t errcap);

/* ---- Monte Carlo ---------------------------------------------------------- */

/* n_trials independent trials on streams (seed, 0..n-1); reproducible for any
 * thread count. threads <= 0 selects FRIENDJAM_THREADS or the hardware count. */
int fj_estimate(const fj_config* cfg, uint64_t n_trials, uint64_t seed, int threads,
                fj_estimates* out, char* err, size_t errcap);

/* Secrecy outage counting only the eavesdropper nearest the transmitter. */
int fj_estimate_nearest_only(const fj_config* cfg, uint64_t n_trials, uint64_t seed,
                             int threads, double* rate, double* ci_lo, double* ci_hi,
                             char* err, size_t errcap);

/* ---- sweeps and result tables --------------------------------------------- */

/* Run the sweep described by the config; one row per (value, policy). */
int fj_sweep_run(const fj_config* cfg, double tol, int threads, fj_rows** out,
                 char* err, size_t errcap);
void fj_rows_free(fj_rows* rows);

long fj_rows_count(const fj_rows* rows);

/* Numeric cell by CSV column name; FJ_ERR_INVALID when absent/unknown. */
int fj_rows_cell(const fj_rows* rows, long row, const char* column, double* value,
                 char* err, size_t errcap);

/* Policy label of a row ("E(p=0.1)", "I", "D"). */
int fj_rows_policy(const fj_rows* rows, long row, char* buf, size_t bufcap);

/* Deterministic CSV (fixed 15-column header, 12 significant digits). */
int fj_rows_write_csv(const fj_rows* rows, const char* path, char* err, size_t errcap);
int fj_rows_read_csv(const char* path, fj_rows** out, char* err, size_t errcap);

/* Plot-data blocks (one per policy series): comment header, then
 * "axis_value col1 col2 ..." lines; columns is a comma-separated list. */
int fj_rows_write_plotdata(const fj_rows* rows, const char* columns, const char* path,
                           char* err, size_t errcap);

#ifdef __cplusplus
}
#endif

#endif /* FRIENDJAM_H */
