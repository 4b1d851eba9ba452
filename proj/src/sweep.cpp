#include "sweep.hpp"

#include <iostream>
#include <sstream>

namespace friendjam {

SweepSpec make_sweep_spec(const ParsedConfig& parsed) {
  if (!parsed.has_sweep)
    throw ConfigError("config has no sweep (sweep_axis/sweep_values/methods)");
  SweepSpec spec;
  spec.base = parsed.config;
  spec.policies = parsed.policies;
  spec.axis = parsed.sweep_axis;
  spec.values = parsed.sweep_values;
  spec.method_closed = parsed.method_closed;
  spec.method_numeric = parsed.method_numeric;
  spec.method_montecarlo = parsed.method_montecarlo;
  spec.n_trials = parsed.n_trials;
  if (parsed.seed) spec.seed = *parsed.seed;
  else if (parsed.method_montecarlo)
    throw ConfigError("montecarlo sweep requires a seed (config key or --seed)");
  return spec;
}

void apply_axis(NetworkConfig& config, JammingScheme& scheme, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::lambda: config.legit_intensity = value; break;
    case SweepAxis::lambda_e: config.eaves_intensity = value; break;
    case SweepAxis::p: scheme.p = value; break;
    case SweepAxis::R1: scheme.lfc_radius = value; break;
    case SweepAxis::R2: scheme.lfa_outer = value; break;
    case SweepAxis::D: config.disk_radius = value; break;
    case SweepAxis::l: config.tx_rx_distance = value; break;
    case SweepAxis::beta: config.rx_sir_threshold = value; break;
    case SweepAxis::beta_e: config.eaves_sir_threshold = value; break;
  }
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw ConfigError("sweep has no values");
  if (spec.method_closed && spec.base.path_loss_alpha != 2.0 &&
      spec.base.path_loss_alpha != 4.0)
    throw ConfigError("method 'closed' requires alpha = 2 or 4");

  // every swept point must yield a valid pair before anything runs
  for (double v : spec.values) {
    for (const JammingScheme& base_scheme : spec.policies) {
      NetworkConfig c = spec.base;
      JammingScheme s = base_scheme;
      apply_axis(c, s, spec.axis, v);
      auto errs = validation_errors(c, s);
      if (!errs.empty()) {
        std::ostringstream os;
        os << "sweep point " << axis_name(spec.axis) << "=" << v << " ["
           << policy_name(base_scheme) << "] invalid: ";
        for (size_t i = 0; i < errs.size(); ++i) os << (i ? "; " : "") << errs[i];
        throw ValidationError({os.str()});
      }
    }
  }

  std::vector<ResultRow> rows;
  rows.reserve(spec.values.size() * spec.policies.size());
  for (double v : spec.values) {
    for (const JammingScheme& base_scheme : spec.policies) {
      NetworkConfig c = spec.base;
      JammingScheme s = base_scheme;
      apply_axis(c, s, spec.axis, v);

      ResultRow row;
      row.axis_value = v;
      row.policy = policy_name(s);
      row.alpha = c.path_loss_alpha;

      auto note_failure = [&](const char* what, const std::exception& e) {
        std::cerr << "sweep point " << axis_name(spec.axis) << "=" << v << " ["
                  << row.policy << "] " << what << " failed: " << e.what() << "\n";
      };

      if (spec.method_closed) {
        try {
          row.top_closed = transmission_outage(c, s, Method::closed, spec.tol);
        } catch (const NumericError& e) {
          note_failure("closed TOP", e);
        }
      }
      if (spec.method_numeric) {
        try {
          row.top_numeric = transmission_outage(c, s, Method::numeric, spec.tol);
        } catch (const NumericError& e) {
          note_failure("numeric TOP", e);
        }
      }
      if (spec.method_closed || spec.method_numeric) {
        Method m = spec.method_closed ? Method::closed : Method::numeric;
        try {
          row.sop_upper = secrecy_outage_upper(c, s, m, spec.tol).value;
          row.sop_lower = secrecy_outage_lower(c, s, m, spec.tol).value;
        } catch (const NumericError& e) {
          note_failure("SOP bounds", e);
        }
      }
      if (spec.method_montecarlo) {
        Estimates est = estimate(c, s, spec.n_trials, spec.seed, spec.threads);
        row.top_mc = est.top_hat;
        row.top_ci_lo = est.top_ci.lo;
        row.top_ci_hi = est.top_ci.hi;
        row.sop_mc = est.sop_hat;
        row.sop_ci_lo = est.sop_ci.lo;
        row.sop_ci_hi = est.sop_ci.hi;
        row.n_trials = est.n_trials;
        row.seed = est.seed;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace friendjam
