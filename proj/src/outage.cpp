#include "outage.hpp"

#include "geometry.hpp"
#include "quadrature.hpp"

namespace friendjam {

namespace {

LaplaceQuery query_at(const NetworkConfig& c, const JammingScheme& s, double signal_r) {
  LaplaceQuery q;
  q.s = c.eaves_sir_threshold * std::pow(signal_r, c.path_loss_alpha);
  q.y_norm = signal_r;
  q.lambda = c.legit_intensity;
  q.scheme = s;
  q.alpha = c.path_loss_alpha;
  return q;
}

// L(beta_e * r^alpha) observed at y_norm = r, by the requested method.
double laplace_at(const NetworkConfig& c, const JammingScheme& s, double r,
                  Method method, double tol) {
  LaplaceQuery q = query_at(c, s, r);
  return method == Method::closed ? laplace_closed(q) : laplace_numeric(q, 0.1 * tol);
}

}  // namespace

double transmission_outage(const NetworkConfig& config, const JammingScheme& scheme,
                           Method method, double tol) {
  validate_or_throw(config, scheme);
  LaplaceQuery q;
  q.s = config.rx_sir_threshold * std::pow(config.tx_rx_distance, config.path_loss_alpha);
  q.y_norm = config.tx_rx_distance;
  q.lambda = config.legit_intensity;
  q.scheme = scheme;
  q.alpha = config.path_loss_alpha;
  double exponent = method == Method::closed ? log_exponent_closed(q).total()
                                             : log_exponent_numeric(q, tol).total();
  return -std::expm1(-exponent);
}

BoundResult secrecy_outage_upper(const NetworkConfig& config, const JammingScheme& scheme,
                                 Method method, double tol) {
  validate_or_throw(config, scheme);
  if (config.eaves_intensity == 0.0) return {0.0, 0.0, 0.0};
  auto res = quad::integrate(
      [&](double r) { return laplace_at(config, scheme, r, method, tol) * r; }, 0.0,
      config.disk_radius, tol, 0.0, 4000);
  if (!res.converged)
    throw NumericError("secrecy_outage_upper: quadrature did not converge", res.abs_error);
  const double scale = 2.0 * kPi * config.eaves_intensity;
  BoundResult out;
  out.exponent = scale * res.value;
  out.value = -std::expm1(-out.exponent);
  out.quad_error = scale * res.abs_error * std::exp(-out.exponent);
  return out;
}

BoundResult secrecy_outage_lower(const NetworkConfig& config, const JammingScheme& scheme,
                                 Method method, double tol) {
  validate_or_throw(config, scheme);
  if (config.eaves_intensity == 0.0) return {0.0, 0.0, 0.0};
  auto res = quad::integrate(
      [&](double r) {
        return nearest_eaves_pdf(r, config.eaves_intensity, config.disk_radius) *
               laplace_at(config, scheme, r, method, tol);
      },
      0.0, config.disk_radius, tol, 0.0, 4000);
  if (!res.converged)
    throw NumericError("secrecy_outage_lower: quadrature did not converge", res.abs_error);
  return {res.value, res.abs_error, 0.0};
}

double far_eaves_intercept_limit(const JammingScheme& scheme, double lambda, double beta_e) {
  if (scheme.policy != Policy::E || scheme.p != 1.0)
    throw std::invalid_argument("far_eaves_intercept_limit requires Policy E with p=1");
  if (!(beta_e >= 0.0)) throw std::invalid_argument("beta_e must be >= 0");
  const double r2 = scheme.lfa_outer;
  return std::exp(-lambda * kPi * r2 * r2 * beta_e / (beta_e + 1.0));
}

OutageReport evaluate_outage(const NetworkConfig& config, const JammingScheme& scheme,
                             Method method, double tol) {
  OutageReport rep;
  rep.method = method;
  rep.top = transmission_outage(config, scheme, method, tol);
  BoundResult ub = secrecy_outage_upper(config, scheme, method, tol);
  BoundResult lb = secrecy_outage_lower(config, scheme, method, tol);
  rep.sop_upper = ub.value;
  rep.sop_lower = lb.value;
  rep.quadrature_error = std::max(ub.quad_error, lb.quad_error);
  return rep;
}

}  // namespace friendjam
