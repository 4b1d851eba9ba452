#include "friendjam/friendjam.h"

#include <cstring>
#include <sstream>

#include "config_file.hpp"
#include "io.hpp"
#include "laplace.hpp"
#include "montecarlo.hpp"
#include "outage.hpp"
#include "sweep.hpp"

namespace fj = friendjam;

struct fj_config {
  fj::RawConfig raw;
};

struct fj_rows {
  std::vector<fj::ResultRow> rows;
};

namespace {

void put_err(char* err, size_t errcap, const char* msg) {
  if (!err || errcap == 0) return;
  std::strncpy(err, msg, errcap - 1);
  err[errcap - 1] = '\0';
}

// Runs fn, mapping exceptions onto status codes + message buffer.
template <class Fn>
int guarded(char* err, size_t errcap, Fn&& fn) {
  try {
    fn();
    return FJ_OK;
  } catch (const fj::NumericError& e) {
    put_err(err, errcap, e.what());
    return FJ_ERR_NUMERIC;
  } catch (const std::exception& e) {
    put_err(err, errcap, e.what());
    return FJ_ERR_INVALID;
  } catch (...) {
    put_err(err, errcap, "unknown error");
    return FJ_ERR_INVALID;
  }
}

fj::Method to_method(int method) {
  if (method == FJ_METHOD_CLOSED) return fj::Method::closed;
  if (method == FJ_METHOD_NUMERIC) return fj::Method::numeric;
  throw std::invalid_argument("method must be FJ_METHOD_CLOSED or FJ_METHOD_NUMERIC");
}

fj::LaplaceQuery make_query(const fj_config* cfg, double s, double y_norm) {
  fj::ParsedConfig parsed = cfg->raw.build();
  fj::LaplaceQuery q;
  q.s = s;
  q.y_norm = y_norm;
  q.lambda = parsed.config.legit_intensity;
  q.scheme = parsed.scheme;
  q.alpha = parsed.config.path_loss_alpha;
  return q;
}

}  // namespace

extern "C" {

const char* fj_version(void) { return "friendjam 1.0.0"; }

fj_config* fj_config_new(void) { return new fj_config(); }

void fj_config_free(fj_config* cfg) { delete cfg; }

int fj_config_load_file(fj_config* cfg, const char* path, char* err, size_t errcap) {
  if (!cfg || !path) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] { cfg->raw.load_file(path); });
}

int fj_config_load_text(fj_config* cfg, const char* text, char* err, size_t errcap) {
  if (!cfg || !text) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] { cfg->raw.parse_text(text); });
}

int fj_config_set(fj_config* cfg, const char* key, const char* value, char* err,
                  size_t errcap) {
  if (!cfg || !key || !value) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] { cfg->raw.set(key, value); });
}

int fj_config_get(const fj_config* cfg, const char* key, char* buf, size_t bufcap) {
  if (!cfg || !key || !buf || bufcap == 0) return FJ_ERR_INVALID;
  auto v = cfg->raw.get(key);
  if (!v) return FJ_ERR_INVALID;
  std::strncpy(buf, v->c_str(), bufcap - 1);
  buf[bufcap - 1] = '\0';
  return FJ_OK;
}

int fj_config_validate(const fj_config* cfg, char* err, size_t errcap) {
  if (!cfg) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] { cfg->raw.build(); });
}

int fj_config_has_sweep(const fj_config* cfg) {
  if (!cfg) return 0;
  return cfg->raw.get("sweep_axis") ? 1 : 0;
}

int fj_laplace(const fj_config* cfg, double s, double y_norm, int method, double tol,
               double* value, char* err, size_t errcap) {
  if (!cfg || !value) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    fj::LaplaceQuery q = make_query(cfg, s, y_norm);
    *value = to_method(method) == fj::Method::closed ? fj::laplace_closed(q)
                                                     : fj::laplace_numeric(q, tol);
  });
}

int fj_log_exponent(const fj_config* cfg, double s, double y_norm, int method,
                    double tol, double* lfc_term, double* lfa_term, char* err,
                    size_t errcap) {
  if (!cfg || !lfc_term || !lfa_term)
    return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    fj::LaplaceQuery q = make_query(cfg, s, y_norm);
    fj::ExponentParts parts = to_method(method) == fj::Method::closed
                                  ? fj::log_exponent_closed(q)
                                  : fj::log_exponent_numeric(q, tol);
    *lfc_term = parts.lfc;
    *lfa_term = parts.lfa;
  });
}

int fj_outage(const fj_config* cfg, int method, double tol, fj_outage_report* out,
              char* err, size_t errcap) {
  if (!cfg || !out) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    fj::ParsedConfig parsed = cfg->raw.build();
    fj::Method m = to_method(method);
    out->top = fj::transmission_outage(parsed.config, parsed.scheme, m, tol);
    fj::BoundResult ub = fj::secrecy_outage_upper(parsed.config, parsed.scheme, m, tol);
    fj::BoundResult lb = fj::secrecy_outage_lower(parsed.config, parsed.scheme, m, tol);
    out->sop_upper = ub.value;
    out->sop_lower = lb.value;
    out->sop_upper_exponent = ub.exponent;
    out->quad_error = std::max(ub.quad_error, lb.quad_error);
    out->method = method;
  });
}

int fj_far_eaves_intercept_limit(const fj_config* cfg, double* value, char* err,
                                 size_t errcap) {
  if (!cfg || !value) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    fj::ParsedConfig parsed = cfg->raw.build();
    *value = fj::far_eaves_intercept_limit(parsed.scheme, parsed.config.legit_intensity,
                                           parsed.config.eaves_sir_threshold);
  });
}

int fj_estimate(const fj_config* cfg, uint64_t n_trials, uint64_t seed, int threads,
                fj_estimates* out, char* err, size_t errcap) {
  if (!cfg || !out) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    fj::ParsedConfig parsed = cfg->raw.build();
    fj::Estimates est = fj::estimate(parsed.config, parsed.scheme, n_trials, seed, threads);
    out->n_trials = est.n_trials;
    out->seed = est.seed;
    out->top_hat = est.top_hat;
    out->top_ci_lo = est.top_ci.lo;
    out->top_ci_hi = est.top_ci.hi;
    out->sop_hat = est.sop_hat;
    out->sop_ci_lo = est.sop_ci.lo;
    out->sop_ci_hi = est.sop_ci.hi;
  });
}

int fj_estimate_nearest_only(const fj_config* cfg, uint64_t n_trials, uint64_t seed,
                             int threads, double* rate, double* ci_lo, double* ci_hi,
                             char* err, size_t errcap) {
  if (!cfg || !rate) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    fj::ParsedConfig parsed = cfg->raw.build();
    fj::RateEstimate est =
        fj::estimate_nearest_only(parsed.config, parsed.scheme, n_trials, seed, threads);
    *rate = est.rate;
    if (ci_lo) *ci_lo = est.ci.lo;
    if (ci_hi) *ci_hi = est.ci.hi;
  });
}

int fj_sweep_run(const fj_config* cfg, double tol, int threads, fj_rows** out,
                 char* err, size_t errcap) {
  if (!cfg || !out) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    fj::SweepSpec spec = fj::make_sweep_spec(cfg->raw.build());
    if (tol > 0) spec.tol = tol;
    spec.threads = threads;
    auto rows = fj::run_sweep(spec);
    *out = new fj_rows{std::move(rows)};
  });
}

void fj_rows_free(fj_rows* rows) { delete rows; }

long fj_rows_count(const fj_rows* rows) {
  return rows ? static_cast<long>(rows->rows.size()) : 0;
}

int fj_rows_cell(const fj_rows* rows, long row, const char* column, double* value,
                 char* err, size_t errcap) {
  if (!rows || !column || !value)
    return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  if (row < 0 || row >= fj_rows_count(rows))
    return (put_err(err, errcap, "row out of range"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    auto v = fj::row_value(rows->rows[static_cast<size_t>(row)], column);
    if (!v) throw std::invalid_argument(std::string("cell absent: ") + column);
    *value = *v;
  });
}

int fj_rows_policy(const fj_rows* rows, long row, char* buf, size_t bufcap) {
  if (!rows || !buf || bufcap == 0) return FJ_ERR_INVALID;
  if (row < 0 || row >= fj_rows_count(rows)) return FJ_ERR_INVALID;
  std::strncpy(buf, rows->rows[static_cast<size_t>(row)].policy.c_str(), bufcap - 1);
  buf[bufcap - 1] = '\0';
  return FJ_OK;
}

int fj_rows_write_csv(const fj_rows* rows, const char* path, char* err, size_t errcap) {
  if (!rows || !path) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] { fj::write_csv(rows->rows, path); });
}

int fj_rows_read_csv(const char* path, fj_rows** out, char* err, size_t errcap) {
  if (!path || !out) return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] { *out = new fj_rows{fj::read_csv(path)}; });
}

int fj_rows_write_plotdata(const fj_rows* rows, const char* columns, const char* path,
                           char* err, size_t errcap) {
  if (!rows || !columns || !path)
    return (put_err(err, errcap, "null argument"), FJ_ERR_INVALID);
  return guarded(err, errcap, [&] {
    std::vector<std::string> cols;
    std::string item;
    std::istringstream is(columns);
    while (std::getline(is, item, ','))
      if (!item.empty()) cols.push_back(item);
    fj::write_plotdata(rows->rows, cols, path);
  });
}

}  // extern "C"
