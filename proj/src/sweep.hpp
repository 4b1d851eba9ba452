#pragma once

#include <optional>

#include "config_file.hpp"
#include "montecarlo.hpp"
#include "outage.hpp"

namespace friendjam {

struct SweepSpec {
  NetworkConfig base;
  std::vector<JammingScheme> policies;
  SweepAxis axis = SweepAxis::lambda;
  std::vector<double> values;  // strictly ascending
  bool method_closed = false;
  bool method_numeric = false;
  bool method_montecarlo = false;
  std::uint64_t n_trials = 100000;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int threads = 0;
};

SweepSpec make_sweep_spec(const ParsedConfig& parsed);

struct ResultRow {
  double axis_value = 0.0;
  std::string policy;
  double alpha = 0.0;
  std::optional<double> top_closed, top_numeric;
  std::optional<double> sop_upper, sop_lower;
  std::optional<double> top_mc, top_ci_lo, top_ci_hi;
  std::optional<double> sop_mc, sop_ci_lo, sop_ci_hi;
  std::optional<std::uint64_t> n_trials, seed;
};

// Instantiate (config, scheme) for one swept value.
void apply_axis(NetworkConfig& config, JammingScheme& scheme, SweepAxis axis, double value);

// One row per (value, policy), values ascending, policies in listed order.
// Every point is validated before anything runs; numerical failures leave the
// affected cells empty (with a note on stderr) and the sweep continues.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

}  // namespace friendjam
