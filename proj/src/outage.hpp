#pragma once

#include "laplace.hpp"

namespace friendjam {

enum class Method { closed, numeric };

struct OutageReport {
  double top = 0.0;
  double sop_upper = 0.0;
  double sop_lower = 0.0;
  Method method = Method::closed;
  double quadrature_error = 0.0;
};

struct BoundResult {
  double value = 0.0;
  double quad_error = 0.0;
  // -ln(1 - value) for the upper bound, i.e. 2*pi*lambda_e * int L(beta_e r^a) r dr;
  // carried because the probability saturates to 1 long before the exponent does.
  double exponent = 0.0;
};

// P(receiver SIR < beta) = 1 - L(beta * l^alpha) at y_norm = l.
double transmission_outage(const NetworkConfig& config, const JammingScheme& scheme,
                           Method method, double tol = 1e-8);

// 1 - exp(-2*pi*lambda_e * int_0^D L(beta_e r^a)|y=r * r dr)
BoundResult secrecy_outage_upper(const NetworkConfig& config, const JammingScheme& scheme,
                                 Method method, double tol = 1e-8);

// int_0^D 2*lambda_e*pi*r*exp(-lambda_e*pi*r^2) * L(beta_e r^a)|y=r dr
// (nearest-eavesdropper bound; the defective pdf mass < 1 is the
// zero-eavesdropper event, which contributes no outage)
BoundResult secrecy_outage_lower(const NetworkConfig& config, const JammingScheme& scheme,
                                 Method method, double tol = 1e-8);

// Limit of L(beta_e r^alpha)|y=r as r -> inf when every node in the disk of
// radius R2 jams: exp(-lambda*pi*R2^2 * beta_e/(beta_e+1)).
// Requires Policy E with p = 1.
double far_eaves_intercept_limit(const JammingScheme& scheme, double lambda, double beta_e);

OutageReport evaluate_outage(const NetworkConfig& config, const JammingScheme& scheme,
                             Method method, double tol = 1e-8);

}  // namespace friendjam
