// friendjam command-line front end. Talks to the shared library strictly
// through the C API in friendjam/friendjam.h.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "friendjam/friendjam.h"

namespace {

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
  double tol = 1e-8;
  int threads = 0;
};

char g_err[1024];

[[noreturn]] void die(int code, const std::string& msg) {
  std::fprintf(stderr, "friendjam: %s\n", msg.c_str());
  std::exit(code == FJ_OK ? 1 : code);
}

void check(int rc, const char* what) {
  if (rc != FJ_OK) die(rc, std::string(what) + ": " + g_err);
}

fj_config* load_config(const Common& common, bool required_file = true) {
  fj_config* cfg = fj_config_new();
  if (!common.config_path.empty()) {
    check(fj_config_load_file(cfg, common.config_path.c_str(), g_err, sizeof g_err),
          "config");
  } else if (required_file) {
    die(FJ_ERR_INVALID, "--config is required");
  }
  for (const std::string& kv : common.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      die(FJ_ERR_INVALID, "--set expects key=value, got '" + kv + "'");
    check(fj_config_set(cfg, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str(), g_err,
                        sizeof g_err),
          "--set");
  }
  return cfg;
}

int auto_method(const fj_config* cfg) {
  char buf[64];
  if (fj_config_get(cfg, "alpha", buf, sizeof buf) != FJ_OK) return FJ_METHOD_NUMERIC;
  double alpha = std::strtod(buf, nullptr);
  return (alpha == 2.0 || alpha == 4.0) ? FJ_METHOD_CLOSED : FJ_METHOD_NUMERIC;
}

int method_from_name(const std::string& name, const fj_config* cfg) {
  if (name == "closed") return FJ_METHOD_CLOSED;
  if (name == "numeric") return FJ_METHOD_NUMERIC;
  return auto_method(cfg);
}

bool config_u64(const fj_config* cfg, const char* key, uint64_t* out) {
  char buf[64];
  if (fj_config_get(cfg, key, buf, sizeof buf) != FJ_OK) return false;
  *out = std::strtoull(buf, nullptr, 10);
  return true;
}

void add_common(CLI::App* cmd, Common& common, bool with_tol = true) {
  cmd->add_option("-c,--config", common.config_path, "config file (key = value lines)");
  cmd->add_option("-s,--set", common.overrides, "override a config key (key=value)")
      ->take_all();
  if (with_tol)
    cmd->add_option("--tol", common.tol, "relative quadrature tolerance")
        ->capture_default_str();
  cmd->add_option("--threads", common.threads,
                  "worker threads (0 = FRIENDJAM_THREADS or hardware)");
}

int cmd_analytic(const Common& common, const std::string& method_name) {
  fj_config* cfg = load_config(common);
  check(fj_config_validate(cfg, g_err, sizeof g_err), "validate");
  int method = method_from_name(method_name, cfg);
  fj_outage_report rep;
  check(fj_outage(cfg, method, common.tol, &rep, g_err, sizeof g_err), "outage");
  std::printf("method=%s\n", rep.method == FJ_METHOD_CLOSED ? "closed" : "numeric");
  std::printf("top=%.12g\n", rep.top);
  std::printf("sop_upper=%.12g\n", rep.sop_upper);
  std::printf("sop_lower=%.12g\n", rep.sop_lower);
  std::printf("sop_upper_exponent=%.12g\n", rep.sop_upper_exponent);
  std::printf("quad_error=%.3g\n", rep.quad_error);
  fj_config_free(cfg);
  return 0;
}

int cmd_simulate(const Common& common, uint64_t trials, bool trials_set, int64_t seed,
                 bool seed_set, bool nearest_only) {
  fj_config* cfg = load_config(common);
  check(fj_config_validate(cfg, g_err, sizeof g_err), "validate");
  uint64_t n = trials_set ? trials : 100000;
  if (!trials_set) config_u64(cfg, "n_trials", &n);
  uint64_t s = static_cast<uint64_t>(seed);
  if (!seed_set && !config_u64(cfg, "seed", &s))
    die(FJ_ERR_INVALID, "simulate requires --seed (or a seed key in the config)");
  fj_estimates est;
  check(fj_estimate(cfg, n, s, common.threads, &est, g_err, sizeof g_err), "estimate");
  std::printf("n_trials=%" PRIu64 "\n", est.n_trials);
  std::printf("seed=%" PRIu64 "\n", est.seed);
  std::printf("top_hat=%.12g\n", est.top_hat);
  std::printf("top_ci=[%.12g,%.12g]\n", est.top_ci_lo, est.top_ci_hi);
  std::printf("sop_hat=%.12g\n", est.sop_hat);
  std::printf("sop_ci=[%.12g,%.12g]\n", est.sop_ci_lo, est.sop_ci_hi);
  if (nearest_only) {
    double rate, lo, hi;
    check(fj_estimate_nearest_only(cfg, n, s, common.threads, &rate, &lo, &hi, g_err,
                                   sizeof g_err),
          "estimate_nearest_only");
    std::printf("sop_nearest_hat=%.12g\n", rate);
    std::printf("sop_nearest_ci=[%.12g,%.12g]\n", lo, hi);
  }
  fj_config_free(cfg);
  return 0;
}

int cmd_sweep(const Common& common, const std::string& out_path, int64_t seed,
              bool seed_set, uint64_t trials, bool trials_set) {
  fj_config* cfg = load_config(common);
  if (seed_set)
    check(fj_config_set(cfg, "seed", std::to_string(seed).c_str(), g_err, sizeof g_err),
          "--seed");
  if (trials_set)
    check(fj_config_set(cfg, "n_trials", std::to_string(trials).c_str(), g_err,
                        sizeof g_err),
          "--trials");
  fj_rows* rows = nullptr;
  check(fj_sweep_run(cfg, common.tol, common.threads, &rows, g_err, sizeof g_err),
        "sweep");
  check(fj_rows_write_csv(rows, out_path.c_str(), g_err, sizeof g_err), "write csv");
  std::printf("wrote %ld rows to %s\n", fj_rows_count(rows), out_path.c_str());
  fj_rows_free(rows);
  fj_config_free(cfg);
  return 0;
}

int cmd_validate(const Common& common, uint64_t trials, bool trials_set, int64_t seed,
                 bool seed_set) {
  fj_config* cfg = load_config(common);
  check(fj_config_validate(cfg, g_err, sizeof g_err), "validate");
  uint64_t n = trials_set ? trials : 100000;
  if (!trials_set) config_u64(cfg, "n_trials", &n);
  uint64_t s = static_cast<uint64_t>(seed);
  if (!seed_set && !config_u64(cfg, "seed", &s))
    die(FJ_ERR_INVALID, "validate requires --seed (or a seed key in the config)");

  fj_outage_report rep;
  check(fj_outage(cfg, auto_method(cfg), common.tol, &rep, g_err, sizeof g_err), "outage");
  fj_estimates est;
  check(fj_estimate(cfg, n, s, common.threads, &est, g_err, sizeof g_err), "estimate");

  auto sigma = [&](double phat) {
    double v = std::sqrt(phat * (1.0 - phat) / static_cast<double>(n));
    return v > 0 ? v : 1.0 / static_cast<double>(n);
  };
  bool ok = true;

  double top_sig = sigma(est.top_hat);
  bool top_ok = std::fabs(est.top_hat - rep.top) <= 3.0 * top_sig;
  ok = ok && top_ok;
  std::printf("TOP   analytic=%.6f mc=%.6f |diff|=%.6f 3sigma=%.6f  %s\n", rep.top,
              est.top_hat, std::fabs(est.top_hat - rep.top), 3.0 * top_sig,
              top_ok ? "AGREE" : "DISAGREE");

  double sop_sig = sigma(est.sop_hat);
  bool sop_ok = est.sop_hat >= rep.sop_lower - 3.0 * sop_sig &&
                est.sop_hat <= rep.sop_upper + 3.0 * sop_sig;
  ok = ok && sop_ok;
  std::printf("SOP   bounds=[%.6f,%.6f] mc=%.6f 3sigma=%.6f  %s\n", rep.sop_lower,
              rep.sop_upper, est.sop_hat, 3.0 * sop_sig,
              sop_ok ? "BRACKETED" : "OUT-OF-BOUNDS");
  std::printf("SOP   |mc-upper|=%.6f\n", std::fabs(est.sop_hat - rep.sop_upper));

  fj_config_free(cfg);
  if (!ok) return FJ_ERR_NUMERIC;
  return 0;
}

int cmd_plotdata(const Common& common, const std::string& from_csv,
                 const std::string& columns, const std::string& out_path, int64_t seed,
                 bool seed_set) {
  fj_rows* rows = nullptr;
  if (!from_csv.empty()) {
    check(fj_rows_read_csv(from_csv.c_str(), &rows, g_err, sizeof g_err), "read csv");
  } else {
    fj_config* cfg = load_config(common);
    if (seed_set)
      check(fj_config_set(cfg, "seed", std::to_string(seed).c_str(), g_err, sizeof g_err),
            "--seed");
    check(fj_sweep_run(cfg, common.tol, common.threads, &rows, g_err, sizeof g_err),
          "sweep");
    fj_config_free(cfg);
  }
  check(fj_rows_write_plotdata(rows, columns.c_str(), out_path.c_str(), g_err,
                               sizeof g_err),
        "write plotdata");
  std::printf("wrote plot data to %s\n", out_path.c_str());
  fj_rows_free(rows);
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"reliability (TOP) and secrecy (SOP) outage analysis for finite "
               "Poisson networks with friendship-based cooperative jamming"};
  app.require_subcommand(1);

  Common common;
  std::string method_name = "auto";
  std::string out_path, from_csv, columns;
  uint64_t trials = 100000;
  int64_t seed = 0;

  auto* analytic = app.add_subcommand("analytic", "closed-form / numeric TOP and SOP bounds");
  add_common(analytic, common);
  analytic->add_option("--method", method_name, "closed | numeric | auto")
      ->check(CLI::IsMember({"closed", "numeric", "auto"}))
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage estimation");
  add_common(simulate, common);
  auto* sim_trials = simulate->add_option("-n,--trials", trials, "number of trials");
  auto* sim_seed = simulate->add_option("--seed", seed, "base RNG seed");
  bool nearest_only = false;
  simulate->add_flag("--nearest-only", nearest_only,
                     "also report the nearest-eavesdropper secrecy outage rate");

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep, emit CSV");
  add_common(sweep, common);
  sweep->add_option("-o,--out", out_path, "output CSV path")->required();
  auto* swp_seed = sweep->add_option("--seed", seed, "base RNG seed");
  auto* swp_trials = sweep->add_option("-n,--trials", trials, "trials per sweep point");

  auto* validate = app.add_subcommand("validate", "analytic vs Monte Carlo agreement");
  add_common(validate, common);
  auto* val_trials = validate->add_option("-n,--trials", trials, "number of trials");
  auto* val_seed = validate->add_option("--seed", seed, "base RNG seed");

  auto* plotdata = app.add_subcommand("plotdata", "emit plot-data series blocks");
  add_common(plotdata, common);
  plotdata->add_option("--from-csv", from_csv, "reuse rows from a sweep CSV");
  plotdata->add_option("--columns", columns, "comma-separated value columns")->required();
  plotdata->add_option("-o,--out", out_path, "output path")->required();
  auto* plt_seed = plotdata->add_option("--seed", seed, "base RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : FJ_ERR_INVALID;
  }

  if (app.got_subcommand(analytic)) return cmd_analytic(common, method_name);
  if (app.got_subcommand(simulate))
    return cmd_simulate(common, trials, sim_trials->count() > 0, seed,
                        sim_seed->count() > 0, nearest_only);
  if (app.got_subcommand(sweep))
    return cmd_sweep(common, out_path, seed, swp_seed->count() > 0, trials,
                     swp_trials->count() > 0);
  if (app.got_subcommand(validate))
    return cmd_validate(common, trials, val_trials->count() > 0, seed,
                        val_seed->count() > 0);
  if (app.got_subcommand(plotdata))
    return cmd_plotdata(common, from_csv, columns, out_path, seed,
                        plt_seed->count() > 0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "friendjam: %s\n", e.what());
    return FJ_ERR_INVALID;
  }
}
