#pragma once

#include "model.hpp"

namespace friendjam {

// One evaluation request for the Laplace transform E[exp(-s*I(y))] of the
// jammer interference observed at radius y_norm from the transmitter.
struct LaplaceQuery {
  double s = 0.0;       // transform argument, dimension length^alpha
  double y_norm = 0.0;  // observation point radius ||y||
  double lambda = 0.0;  // legitimate-node intensity
  JammingScheme scheme;
  double alpha = 4.0;
};

// Real pair solving eta^2 - psi^2 = g = (r^2-y^2)^2 - s and
// eta*psi = sqrt(s)*(r^2+y^2); the alpha=4 closed form is written in these.
struct EtaPsi {
  double eta = 0.0;
  double psi = 0.0;
  double g = 0.0;
};

// Requires s > 0 and (r, y_norm) != (0, 0).
EtaPsi eval_eta_psi(double r, double s, double y_norm);

// -ln L split into the disk (LFC) and annulus (LFA) contributions; both are
// nonnegative and the transform is exp(-(lfc + lfa)).
struct ExponentParts {
  double lfc = 0.0;
  double lfa = 0.0;
  double quad_error = 0.0;  // 0 for closed forms
  double total() const { return lfc + lfa; }
};

void check_query(const LaplaceQuery& q);  // throws ValidationError / invalid_argument

// Closed forms, alpha in {2, 4} only.
ExponentParts log_exponent_closed(const LaplaceQuery& q);
double laplace_closed(const LaplaceQuery& q);

// Adaptive 2D quadrature (radial x angular) of the probability generating
// functional, any alpha >= 2. rel_tol is relative on each exponent part.
// Throws NumericError when the requested tolerance cannot be reached.
ExponentParts log_exponent_numeric(const LaplaceQuery& q, double rel_tol);
double laplace_numeric(const LaplaceQuery& q, double rel_tol);

}  // namespace friendjam
