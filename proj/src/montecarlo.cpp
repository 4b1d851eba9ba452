#include "montecarlo.hpp"

#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include "geometry.hpp"

namespace friendjam {

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (phat + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
  WilsonInterval w{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == 0) w.lo = 0.0;  // boundary endpoints are exact
  if (successes == n) w.hi = 1.0;
  return w;
}

TrialOutcome run_trial(const NetworkConfig& config, const JammingScheme& scheme,
                       RngStream& rng) {
  const double alpha = config.path_loss_alpha;
  const double half_neg_alpha = -0.5 * alpha;

  PointSet legit = sample_ppp(config.legit_intensity, config.disk_radius, rng);
  PointSet eaves = sample_ppp(config.eaves_intensity, config.disk_radius, rng);
  for (Point& z : eaves.points) {
    while (z.radius == 0.0) {  // SIR undefined at the transmitter itself
      z = Point(config.disk_radius * std::sqrt(rng.uniform()), 2.0 * kPi * rng.uniform());
    }
  }
  PointSet jammers = select_jammers(legit, scheme, alpha, rng);

  // cache jammer cartesian coordinates, reused per target
  std::vector<double> jx(jammers.points.size()), jy(jammers.points.size());
  for (size_t i = 0; i < jammers.points.size(); ++i) {
    jx[i] = jammers.points[i].radius * std::cos(jammers.points[i].angle);
    jy[i] = jammers.points[i].radius * std::sin(jammers.points[i].angle);
  }
  auto interference_at = [&](double tx, double ty) {
    double sum = 0.0;
    for (size_t i = 0; i < jx.size(); ++i) {
      double dx = jx[i] - tx, dy = jy[i] - ty;
      double d2 = dx * dx + dy * dy;
      sum += sample_fading(rng) * std::pow(d2, half_neg_alpha);
    }
    return sum;
  };

  TrialOutcome out;
  out.n_jammers = static_cast<std::uint32_t>(jammers.points.size());
  out.n_eaves = static_cast<std::uint32_t>(eaves.points.size());

  const double rx_fade = sample_fading(rng);
  const double rx_interference = interference_at(config.tx_rx_distance, 0.0);
  out.rx_sir = sir(rx_fade, config.tx_rx_distance, alpha, rx_interference);
  out.transmission_outage = out.rx_sir < config.rx_sir_threshold;

  double max_sir = -std::numeric_limits<double>::infinity();
  double nearest_r = std::numeric_limits<double>::infinity();
  for (const Point& z : eaves.points) {
    const double z_fade = sample_fading(rng);
    const double zx = z.radius * std::cos(z.angle);
    const double zy = z.radius * std::sin(z.angle);
    const double z_sir = sir(z_fade, z.radius, alpha, interference_at(zx, zy));
    if (z_sir > max_sir) max_sir = z_sir;
    if (z.radius < nearest_r) {
      nearest_r = z.radius;
      out.nearest_eaves_sir = z_sir;
    }
  }
  if (out.n_eaves > 0) {
    out.max_eaves_sir = max_sir;
    out.secrecy_outage = max_sir > config.eaves_sir_threshold;
  }
  return out;
}

namespace {

struct Counts {
  std::uint64_t to = 0, so = 0, so_nearest = 0;
};

Counts run_range(const NetworkConfig& config, const JammingScheme& scheme,
                 std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
  Counts c;
  for (std::uint64_t i = begin; i < end; ++i) {
    RngStream rng(seed, i);
    TrialOutcome t = run_trial(config, scheme, rng);
    if (t.transmission_outage) ++c.to;
    if (t.secrecy_outage) ++c.so;
    if (t.nearest_eaves_sir && *t.nearest_eaves_sir > config.eaves_sir_threshold)
      ++c.so_nearest;
  }
  return c;
}

Counts run_all(const NetworkConfig& config, const JammingScheme& scheme,
               std::uint64_t n_trials, std::uint64_t seed, int threads) {
  validate_or_throw(config, scheme);
  if (n_trials == 0) throw std::invalid_argument("estimate: n_trials must be >= 1");
  if (threads <= 0) threads = default_thread_count();
  std::uint64_t want = std::min<std::uint64_t>(threads, n_trials);

  if (want <= 1) return run_range(config, scheme, seed, 0, n_trials);

  std::vector<Counts> partial(want);
  std::vector<std::thread> workers;
  workers.reserve(want);
  for (std::uint64_t w = 0; w < want; ++w) {
    std::uint64_t begin = n_trials * w / want;
    std::uint64_t end = n_trials * (w + 1) / want;
    workers.emplace_back([&, w, begin, end] {
      partial[w] = run_range(config, scheme, seed, begin, end);
    });
  }
  for (auto& t : workers) t.join();
  Counts total;
  for (const Counts& c : partial) {
    total.to += c.to;
    total.so += c.so;
    total.so_nearest += c.so_nearest;
  }
  return total;
}

}  // namespace

Estimates estimate(const NetworkConfig& config, const JammingScheme& scheme,
                   std::uint64_t n_trials, std::uint64_t seed, int threads) {
  Counts c = run_all(config, scheme, n_trials, seed, threads);
  Estimates est;
  est.n_trials = n_trials;
  est.seed = seed;
  est.top_hat = static_cast<double>(c.to) / static_cast<double>(n_trials);
  est.top_ci = wilson_interval(c.to, n_trials);
  est.sop_hat = static_cast<double>(c.so) / static_cast<double>(n_trials);
  est.sop_ci = wilson_interval(c.so, n_trials);
  return est;
}

RateEstimate estimate_nearest_only(const NetworkConfig& config, const JammingScheme& scheme,
                                   std::uint64_t n_trials, std::uint64_t seed, int threads) {
  Counts c = run_all(config, scheme, n_trials, seed, threads);
  RateEstimate est;
  est.n_trials = n_trials;
  est.seed = seed;
  est.rate = static_cast<double>(c.so_nearest) / static_cast<double>(n_trials);
  est.ci = wilson_interval(c.so_nearest, n_trials);
  return est;
}

int default_thread_count() {
  if (const char* env = std::getenv("FRIENDJAM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace friendjam
