#pragma once

#include <optional>

#include "model.hpp"
#include "rng.hpp"

namespace friendjam {

struct TrialOutcome {
  bool transmission_outage = false;
  bool secrecy_outage = false;
  std::uint32_t n_jammers = 0;
  std::uint32_t n_eaves = 0;
  double rx_sir = 0.0;
  std::optional<double> max_eaves_sir;      // absent when n_eaves == 0
  std::optional<double> nearest_eaves_sir;  // SIR at the eavesdropper closest to o
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// 95% by default (z = 1.96); robust near rates 0 and 1.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n,
                               double z = 1.959963984540054);

struct Estimates {
  std::uint64_t n_trials = 0;
  double top_hat = 0.0;
  WilsonInterval top_ci;
  double sop_hat = 0.0;
  WilsonInterval sop_ci;
  std::uint64_t seed = 0;
};

struct RateEstimate {
  std::uint64_t n_trials = 0;
  double rate = 0.0;
  WilsonInterval ci;
  std::uint64_t seed = 0;
};

// One network realization: sample the legitimate and eavesdropper processes,
// thin the jammers, draw one unit-mean exponential fade per (source,
// destination) pair and evaluate both outage events. Draw order is fixed:
// legitimate PPP, eavesdropper PPP (re-drawing any point that lands exactly
// on the origin), annulus thinning, Tx->Rx fade, jammer->Rx fades in point
// order, then per eavesdropper the Tx fade followed by its jammer fades.
TrialOutcome run_trial(const NetworkConfig& config, const JammingScheme& scheme,
                       RngStream& rng);

// n_trials independent trials on streams (seed, 0..n-1); bitwise reproducible
// for any thread count because trials bind to streams by index and only
// integer counters are reduced. threads <= 0 picks the default (env
// FRIENDJAM_THREADS, else hardware concurrency).
Estimates estimate(const NetworkConfig& config, const JammingScheme& scheme,
                   std::uint64_t n_trials, std::uint64_t seed, int threads = 0);

// Secrecy-outage rate counting only the eavesdropper nearest the transmitter;
// runs the same streams as estimate(), so outcomes are paired per trial.
RateEstimate estimate_nearest_only(const NetworkConfig& config, const JammingScheme& scheme,
                                   std::uint64_t n_trials, std::uint64_t seed,
                                   int threads = 0);

int default_thread_count();

}  // namespace friendjam
