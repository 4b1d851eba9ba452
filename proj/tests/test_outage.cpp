#include <doctest.h>

#include "geometry.hpp"
#include "montecarlo.hpp"
#include "oracles.hpp"
#include "outage.hpp"

using namespace friendjam;

namespace {

NetworkConfig section5_config(double alpha = 4.0) {
  NetworkConfig c;
  c.disk_radius = 30.0;
  c.legit_intensity = 0.1;
  c.eaves_intensity = 0.001;
  c.tx_rx_distance = 1.0;
  c.path_loss_alpha = alpha;
  c.rx_sir_threshold = 0.5;
  c.eaves_sir_threshold = 0.1;
  return c;
}

const JammingScheme kE01{1.0, 10.0, Policy::E, 0.1};

}  // namespace

TEST_CASE("transmission outage trivial cases") {
  NetworkConfig c = section5_config();

  SUBCASE("no jammers means no transmission outage") {
    c.legit_intensity = 0.0;
    CHECK(transmission_outage(c, kE01, Method::closed) == 0.0);
    CHECK(transmission_outage(c, kE01, Method::numeric) == 0.0);
  }

  SUBCASE("vanishing threshold drives the outage to zero") {
    double prev = 1.0;
    for (double beta : {1e-3, 1e-6, 1e-9, 1e-12}) {
      c.rx_sir_threshold = beta;
      double top = transmission_outage(c, kE01, Method::closed);
      CHECK(top < prev);
      prev = top;
    }
    CHECK(prev < 1e-5);
  }
}

TEST_CASE("closed and numeric TOP agree") {
  for (double alpha : {2.0, 4.0}) {
    NetworkConfig c = section5_config(alpha);
    for (JammingScheme s : {kE01, JammingScheme{1, 10, Policy::I, 0},
                            JammingScheme{1, 10, Policy::D, 0}}) {
      double tc = transmission_outage(c, s, Method::closed);
      double tn = transmission_outage(c, s, Method::numeric, 1e-9);
      CHECK(tc == doctest::Approx(tn).epsilon(1e-6));
    }
  }
}

TEST_CASE("TOP matches the simulator at the validation settings") {
  NetworkConfig c = section5_config();
  double top = transmission_outage(c, kE01, Method::closed);
  Estimates est = estimate(c, kE01, 100000, 20240901);
  double sigma = std::sqrt(est.top_hat * (1.0 - est.top_hat) / 100000.0);
  CHECK(std::abs(est.top_hat - top) <= 3.0 * sigma);
}

TEST_CASE("secrecy outage bounds") {
  NetworkConfig c = section5_config();

  SUBCASE("no eavesdroppers, no secrecy outage") {
    c.eaves_intensity = 0.0;
    CHECK(secrecy_outage_upper(c, kE01, Method::closed).value == 0.0);
    CHECK(secrecy_outage_lower(c, kE01, Method::closed).value == 0.0);
  }

  SUBCASE("lower bound never exceeds the upper bound") {
    RngStream rng(2, 0);
    for (int i = 0; i < 12; ++i) {
      NetworkConfig cfg = section5_config(rng.uniform() < 0.5 ? 2.0 : 4.0);
      cfg.legit_intensity = 0.02 + 0.2 * rng.uniform();
      cfg.eaves_intensity = 0.0005 + 0.004 * rng.uniform();
      cfg.eaves_sir_threshold = 0.05 + 0.5 * rng.uniform();
      JammingScheme s{1.0, 2.0 + 8.0 * rng.uniform(), Policy::E, rng.uniform()};
      double ub = secrecy_outage_upper(cfg, s, Method::closed).value;
      double lb = secrecy_outage_lower(cfg, s, Method::closed).value;
      CHECK(lb <= ub + 1e-12);
      CHECK(lb >= 0.0);
      CHECK(ub <= 1.0);
    }
  }

  SUBCASE("upper bound reproduced by an independent Simpson evaluation") {
    BoundResult ub = secrecy_outage_upper(c, kE01, Method::closed, 1e-10);
    auto integrand = [&](double r) {
      LaplaceQuery q;
      q.s = c.eaves_sir_threshold * std::pow(r, 4.0);
      q.y_norm = r;
      q.lambda = c.legit_intensity;
      q.scheme = kE01;
      q.alpha = 4.0;
      return laplace_closed(q) * r;
    };
    double integral = oracles::simpson(integrand, 0.0, c.disk_radius, 8192);
    double expect = -std::expm1(-2.0 * kPi * c.eaves_intensity * integral);
    CHECK(std::abs(ub.value - expect) < 1e-6);
  }

  SUBCASE("bounds grow with the network radius and approach one") {
    double prev_ub = -1.0, prev_lb = -1.0;
    for (double d : {10.0, 30.0, 100.0, 300.0}) {
      c.disk_radius = d;
      double ub = secrecy_outage_upper(c, kE01, Method::closed).value;
      double lb = secrecy_outage_lower(c, kE01, Method::closed).value;
      CHECK(ub > prev_ub);
      CHECK(lb >= prev_lb);
      prev_ub = ub;
      prev_lb = lb;
    }
    CHECK(prev_ub > 0.99);
  }

  SUBCASE("more jamming helps secrecy: bounds nonincreasing in lambda") {
    double prev_ub = 2.0, prev_lb = 2.0;
    for (double lambda : {0.02, 0.06, 0.1, 0.2}) {
      c.legit_intensity = lambda;
      double ub = secrecy_outage_upper(c, kE01, Method::closed).value;
      double lb = secrecy_outage_lower(c, kE01, Method::closed).value;
      CHECK(ub < prev_ub);
      CHECK(lb < prev_lb);
      prev_ub = ub;
      prev_lb = lb;
    }
  }
}

TEST_CASE("lower bound matches the nearest-eavesdropper simulator") {
  NetworkConfig c = section5_config();
  double lb = secrecy_outage_lower(c, kE01, Method::closed).value;
  RateEstimate est = estimate_nearest_only(c, kE01, 100000, 20240902);
  double sigma = std::sqrt(est.rate * (1.0 - est.rate) / 100000.0);
  CHECK(std::abs(est.rate - lb) <= 3.0 * sigma);
}

TEST_CASE("TOP monotone in beta and lambda") {
  NetworkConfig c = section5_config();
  double prev = -1.0;
  for (double beta : {0.1, 0.3, 0.5, 1.0, 3.0}) {
    c.rx_sir_threshold = beta;
    double top = transmission_outage(c, kE01, Method::closed);
    CHECK(top > prev);
    prev = top;
  }
  c = section5_config();
  prev = -1.0;
  for (double lambda : {0.01, 0.05, 0.1, 0.2}) {
    c.legit_intensity = lambda;
    double top = transmission_outage(c, kE01, Method::closed);
    CHECK(top > prev);
    prev = top;
  }
}

TEST_CASE("far-eavesdropper intercept limit") {
  JammingScheme all{1.0, 10.0, Policy::E, 1.0};

  SUBCASE("direct values") {
    CHECK(far_eaves_intercept_limit(all, 0.1, 0.0) == doctest::Approx(1.0));
    CHECK(far_eaves_intercept_limit(all, 0.1, 0.1) ==
          doctest::Approx(std::exp(-kPi * 10.0 * 0.1 / 1.1)).epsilon(1e-12));
  }

  SUBCASE("precondition: policy E with p = 1") {
    CHECK_THROWS(far_eaves_intercept_limit({1.0, 10.0, Policy::I, 0.0}, 0.1, 0.1));
    CHECK_THROWS(far_eaves_intercept_limit({1.0, 10.0, Policy::E, 0.5}, 0.1, 0.1));
  }

  SUBCASE("numeric transform converges to the limit from afar") {
    double limit = far_eaves_intercept_limit(all, 0.1, 0.1);
    double prev_err = 1.0;
    for (double r : {1e2, 1e3, 1e4}) {
      LaplaceQuery q;
      q.s = 0.1 * std::pow(r, 4.0);
      q.y_norm = r;
      q.lambda = 0.1;
      q.scheme = all;
      q.alpha = 4.0;
      double err = std::abs(laplace_numeric(q, 1e-9) / limit - 1.0);
      CHECK(err < prev_err);
      prev_err = err;
    }
    CHECK(prev_err < 0.01);
  }
}

TEST_CASE("outage report invariants") {
  for (double alpha : {2.0, 4.0}) {
    OutageReport rep = evaluate_outage(section5_config(alpha), kE01,
                                       Method::closed, 1e-9);
    CHECK(rep.top >= 0.0);
    CHECK(rep.top <= 1.0);
    CHECK(rep.sop_lower >= 0.0);
    CHECK(rep.sop_lower <= rep.sop_upper);
    CHECK(rep.sop_upper <= 1.0);
  }
  // numeric method on a non-closed-form exponent
  OutageReport rep = evaluate_outage(section5_config(3.0), kE01, Method::numeric, 1e-7);
  CHECK(rep.top > 0.0);
  CHECK(rep.sop_lower > 0.0);
  CHECK(rep.sop_upper < 1.0);
  CHECK(rep.sop_lower <= rep.sop_upper);
}
