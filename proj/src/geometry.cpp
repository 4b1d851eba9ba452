#include "geometry.hpp"

namespace friendjam {

PointSet sample_ppp(double intensity, double region_radius, RngStream& rng) {
  if (!(intensity >= 0.0)) throw std::invalid_argument("sample_ppp: intensity < 0");
  if (!(region_radius > 0.0)) throw std::invalid_argument("sample_ppp: region_radius <= 0");
  PointSet out;
  out.region_radius = region_radius;
  std::uint64_t n = rng.poisson(intensity * kPi * region_radius * region_radius);
  out.points.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    double r = region_radius * std::sqrt(rng.uniform());
    double theta = 2.0 * kPi * rng.uniform();
    out.points.emplace_back(r, theta);
  }
  return out;
}

double selection_probability(const JammingScheme& scheme, double alpha, double r) {
  const double r1 = scheme.lfc_radius, r2 = scheme.lfa_outer;
  if (!(r >= r1 && r <= r2))
    throw std::invalid_argument("selection_probability: r outside [R1, R2]");
  if (scheme.policy == Policy::E) return scheme.p;
  if (r1 == r2) return 1.0;
  const double denom = std::pow(r2, alpha) - std::pow(r1, alpha);
  const double ra = std::pow(r, alpha);
  double p = scheme.policy == Policy::I ? (ra - std::pow(r1, alpha)) / denom
                                        : (std::pow(r2, alpha) - ra) / denom;
  return std::min(1.0, std::max(0.0, p));
}

PointSet select_jammers(const PointSet& legit, const JammingScheme& scheme,
                        double alpha, RngStream& rng) {
  PointSet out;
  out.region_radius = legit.region_radius;
  for (const Point& pt : legit.points) {
    if (pt.radius < scheme.lfc_radius) {
      out.points.push_back(pt);
    } else if (pt.radius <= scheme.lfa_outer) {
      double u = rng.uniform();
      if (u < selection_probability(scheme, alpha, pt.radius)) out.points.push_back(pt);
    }
  }
  return out;
}

double sample_fading(RngStream& rng) { return rng.exponential(); }

double nearest_eaves_pdf(double r, double lambda_e, double disk_radius) {
  if (!(lambda_e >= 0.0)) throw std::invalid_argument("nearest_eaves_pdf: lambda_e < 0");
  if (!(disk_radius > 0.0)) throw std::invalid_argument("nearest_eaves_pdf: D <= 0");
  if (r < 0.0 || r > disk_radius) return 0.0;
  return 2.0 * lambda_e * kPi * r * std::exp(-lambda_e * kPi * r * r);
}

double expected_lfa_jammers(const JammingScheme& scheme, double alpha, double lambda) {
  const double r1 = scheme.lfc_radius, r2 = scheme.lfa_outer;
  if (r1 >= r2) return 0.0;
  const double area = kPi * (r2 * r2 - r1 * r1);
  if (scheme.policy == Policy::E) return lambda * scheme.p * area;
  // P(r) = u + v*r^alpha; integral of 2*pi*r*P(r) over the annulus.
  const double denom = std::pow(r2, alpha) - std::pow(r1, alpha);
  double u, v;
  if (scheme.policy == Policy::I) {
    u = -std::pow(r1, alpha) / denom;
    v = 1.0 / denom;
  } else {
    u = std::pow(r2, alpha) / denom;
    v = -1.0 / denom;
  }
  const double m = alpha + 2.0;
  double integral = u * (r2 * r2 - r1 * r1) +
                    2.0 * v * (std::pow(r2, m) - std::pow(r1, m)) / m;
  return lambda * kPi * integral;
}

}  // namespace friendjam
