#include <doctest.h>

#include <set>

#include "geometry.hpp"
#include "oracles.hpp"
#include "quadrature.hpp"

using namespace friendjam;

TEST_CASE("rng streams are deterministic and distinct") {
  RngStream a(42, 3), b(42, 3), c(42, 4);
  bool any_diff = false;
  for (int i = 0; i < 100; ++i) {
    auto va = a.next_u64();
    CHECK(va == b.next_u64());
    if (va != c.next_u64()) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("uniform support") {
  RngStream rng(1, 0);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    double v = rng.uniform_open();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("poisson sampler matches mean and variance") {
  RngStream rng(5, 0);
  for (double mean : {0.5, 4.0, 40.0, 700.0}) {  // 700 exercises the chunked path
    const int n = mean > 100 ? 2000 : 20000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
      double k = static_cast<double>(rng.poisson(mean));
      sum += k;
      sum2 += k * k;
    }
    double m = sum / n;
    double var = sum2 / n - m * m;
    double se = std::sqrt(mean / n);
    CHECK(std::abs(m - mean) < 4.0 * se);
    CHECK(var == doctest::Approx(mean).epsilon(0.15));
  }
  CHECK(rng.poisson(0.0) == 0);
}

TEST_CASE("sample_ppp count and support") {
  NetworkConfig cfg;
  RngStream rng(11, 0);

  SUBCASE("zero intensity gives an empty set") {
    auto ps = sample_ppp(0.0, 30.0, rng);
    CHECK(ps.points.empty());
    CHECK(ps.region_radius == 30.0);
  }

  SUBCASE("mean count matches lambda_e * pi * D^2") {
    const double mean = 0.001 * kPi * 900.0;  // 2.827...
    const int draws = 10000;
    double total = 0;
    for (int i = 0; i < draws; ++i) {
      RngStream r(123, static_cast<std::uint64_t>(i));
      total += static_cast<double>(sample_ppp(0.001, 30.0, r).points.size());
    }
    double est = total / draws;
    double se = std::sqrt(mean / draws);
    CHECK(std::abs(est - mean) <= 3.0 * se);
  }

  SUBCASE("all radii within the disk") {
    std::size_t seen = 0;
    std::uint64_t stream = 0;
    while (seen < 100000) {
      RngStream r(9, stream++);
      auto ps = sample_ppp(0.1, 30.0, r);
      for (const Point& p : ps.points) {
        CHECK(p.radius <= 30.0);
        CHECK(p.radius >= 0.0);
        CHECK(p.angle >= 0.0);
        CHECK(p.angle < 2.0 * kPi);
      }
      seen += ps.points.size();
    }
  }
}

TEST_CASE("selection probability formulas") {
  JammingScheme i_scheme{1.0, 10.0, Policy::I, 0.0};
  JammingScheme d_scheme{1.0, 10.0, Policy::D, 0.0};
  JammingScheme e_scheme{1.0, 10.0, Policy::E, 0.1};

  CHECK(selection_probability(i_scheme, 4.0, 1.0) == doctest::Approx(0.0));
  CHECK(selection_probability(i_scheme, 4.0, 10.0) == doctest::Approx(1.0));
  CHECK(selection_probability(d_scheme, 2.0, std::sqrt(50.0)) ==
        doctest::Approx(50.0 / 99.0));
  for (double r : {1.0, 3.3, 7.7, 10.0})
    CHECK(selection_probability(e_scheme, 4.0, r) == doctest::Approx(0.1));
  CHECK_THROWS(selection_probability(i_scheme, 4.0, 0.5));
  CHECK_THROWS(selection_probability(i_scheme, 4.0, 10.5));
}

TEST_CASE("P_I + P_D = 1 pointwise") {
  JammingScheme i_scheme{1.0, 10.0, Policy::I, 0.0};
  JammingScheme d_scheme{1.0, 10.0, Policy::D, 0.0};
  RngStream rng(3, 0);
  for (double alpha : {2.0, 3.0, 4.0}) {
    for (int k = 0; k < 2000; ++k) {
      double r = 1.0 + 9.0 * rng.uniform();
      double sum = selection_probability(i_scheme, alpha, r) +
                   selection_probability(d_scheme, alpha, r);
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("select_jammers degenerate thinning") {
  RngStream rng(21, 0);
  auto legit = sample_ppp(0.2, 30.0, rng);

  JammingScheme none{1.0, 10.0, Policy::E, 0.0};
  RngStream r0(21, 1);
  auto kept0 = select_jammers(legit, none, 4.0, r0);
  for (const Point& p : kept0.points) CHECK(p.radius < 1.0);
  std::size_t lfc = 0;
  for (const Point& p : legit.points)
    if (p.radius < 1.0) ++lfc;
  CHECK(kept0.points.size() == lfc);

  JammingScheme all{1.0, 10.0, Policy::E, 1.0};
  RngStream r1(21, 1);
  auto kept1 = select_jammers(legit, all, 4.0, r1);
  std::size_t within = 0;
  for (const Point& p : legit.points)
    if (p.radius <= 10.0) ++within;
  CHECK(kept1.points.size() == within);
}

TEST_CASE("thinning monotonicity under paired randomness") {
  RngStream sampler(77, 0);
  auto legit = sample_ppp(0.15, 30.0, sampler);
  auto radii = [](const PointSet& ps) {
    std::multiset<double> out;
    for (const Point& p : ps.points) out.insert(p.radius);
    return out;
  };
  // same stream index => identical thinning uniforms per candidate
  RngStream ra(5, 9), rb(5, 9), rc(5, 9);
  auto j0 = radii(select_jammers(legit, {1, 10, Policy::E, 0.0}, 4.0, ra));
  auto jp = radii(select_jammers(legit, {1, 10, Policy::E, 0.35}, 4.0, rb));
  auto j1 = radii(select_jammers(legit, {1, 10, Policy::E, 1.0}, 4.0, rc));
  CHECK(std::includes(jp.begin(), jp.end(), j0.begin(), j0.end()));
  CHECK(std::includes(j1.begin(), j1.end(), jp.begin(), jp.end()));
}

TEST_CASE("expected long-range jammer counts") {
  const double lambda = 0.1;
  JammingScheme i_scheme{1.0, 10.0, Policy::I, 0.0};
  JammingScheme d_scheme{1.0, 10.0, Policy::D, 0.0};

  SUBCASE("alpha = 2: policies I and D have equal expectation") {
    double expect = lambda * kPi * (100.0 - 1.0) / 2.0;
    CHECK(expected_lfa_jammers(i_scheme, 2.0, lambda) == doctest::Approx(expect));
    CHECK(expected_lfa_jammers(d_scheme, 2.0, lambda) == doctest::Approx(expect));
  }

  SUBCASE("alpha = 4: policy D exceeds policy I by the symbolic gap") {
    double ni = expected_lfa_jammers(i_scheme, 4.0, lambda);
    double nd = expected_lfa_jammers(d_scheme, 4.0, lambda);
    // lambda*pi*[(R2^4+R1^4)(R2^2-R1^2) - 2(R2^6-R1^6)/3]/(R2^4-R1^4), = 323433/(3*9999) * lambda*pi
    double gap = lambda * kPi * (10001.0 * 99.0 - 2.0 * 999999.0 / 3.0) / 9999.0;
    CHECK(nd - ni == doctest::Approx(gap).epsilon(1e-12));
    CHECK(nd > ni);
  }

  SUBCASE("empirical count matches the formula (policy I, alpha = 2)") {
    double expect = expected_lfa_jammers(i_scheme, 2.0, lambda);  // = lambda*pi*(R2^2-R1^2)/2
    const int trials = 10000;
    double total = 0;
    for (int t = 0; t < trials; ++t) {
      RngStream rng(31, static_cast<std::uint64_t>(t));
      auto legit = sample_ppp(lambda, 30.0, rng);
      auto jam = select_jammers(legit, i_scheme, 2.0, rng);
      for (const Point& p : jam.points)
        if (p.radius >= 1.0) total += 1.0;
    }
    double est = total / trials;
    double se = std::sqrt(expect / trials);  // thinned PPP count is Poisson
    CHECK(std::abs(est - expect) <= 3.0 * se);
  }
}

TEST_CASE("fading is unit-mean exponential") {
  const int n = 100000;
  RngStream rng(13, 0);
  std::vector<double> draws(n);
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    draws[i] = sample_fading(rng);
    CHECK(draws[i] > 0.0);
    sum += draws[i];
  }
  CHECK(std::abs(sum / n - 1.0) <= 3.0 / std::sqrt(static_cast<double>(n)));

  double d = oracles::ks_statistic(draws, [](double t) { return -std::expm1(-t); });
  CHECK(d < oracles::ks_critical(0.01, n));
}

TEST_CASE("nearest eavesdropper pdf") {
  const double lambda_e = 0.001, disk = 30.0;

  CHECK(nearest_eaves_pdf(0.0, lambda_e, disk) == 0.0);
  CHECK(nearest_eaves_pdf(31.0, lambda_e, disk) == 0.0);
  CHECK(nearest_eaves_pdf(-1.0, lambda_e, disk) == 0.0);
  CHECK(nearest_eaves_pdf(5.0, lambda_e, disk) ==
        doctest::Approx(2.0 * lambda_e * kPi * 5.0 * std::exp(-lambda_e * kPi * 25.0)));

  SUBCASE("quadrature mass equals 1 - exp(-lambda_e pi D^2)") {
    auto res = quad::integrate(
        [&](double r) { return nearest_eaves_pdf(r, lambda_e, disk); }, 0.0, disk,
        1e-13, 0.0);
    REQUIRE(res.converged);
    double mass = -std::expm1(-lambda_e * kPi * disk * disk);
    CHECK(std::abs(res.value - mass) < 1e-10);
  }

  SUBCASE("empirical nearest distance passes a 99% KS test") {
    std::vector<double> nearest;
    nearest.reserve(10000);
    for (int t = 0; t < 10000; ++t) {
      RngStream rng(1009, static_cast<std::uint64_t>(t));
      auto ps = sample_ppp(lambda_e, disk, rng);
      double best = std::numeric_limits<double>::infinity();
      for (const Point& p : ps.points) best = std::min(best, p.radius);
      if (ps.points.size() > 0) nearest.push_back(best);
    }
    // conditional on at least one point: F(r) / F(D)
    const double norm = -std::expm1(-lambda_e * kPi * disk * disk);
    double d = oracles::ks_statistic(nearest, [&](double r) {
      return -std::expm1(-lambda_e * kPi * r * r) / norm;
    });
    CHECK(d < oracles::ks_critical(0.01, nearest.size()));
  }
}
