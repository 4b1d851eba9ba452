#include "laplace.hpp"

#include "geometry.hpp"
#include "quadrature.hpp"


namespace friendjam {

namespace {

// P(r) = u + v*r^alpha inside the annulus (Policy E: u = p, v = 0).
struct UV {
  double u, v;
};

UV policy_uv(const JammingScheme& s, double alpha) {
  if (s.policy == Policy::E) return {s.p, 0.0};
  const double denom = std::pow(s.lfa_outer, alpha) - std::pow(s.lfc_radius, alpha);
  if (s.policy == Policy::I) return {-std::pow(s.lfc_radius, alpha) / denom, 1.0 / denom};
  return {std::pow(s.lfa_outer, alpha) / denom, -1.0 / denom};
}

// ---- alpha = 2 ------------------------------------------------------------
//
// The radial antiderivatives involve
//   asinh((s + r^2 - y^2) / (2 y sqrt(s))) - ln(sqrt(s)/y),
// a 0*inf pair as y -> 0. Both are combined into the single stable form
//   F2(r) = ln((w + sqrt(Q)) / (2 s)),  w = s + r^2 - y^2,  Q = w^2 + 4 s y^2,
// which is exact for every y >= 0 (F2 -> ln(1 + r^2/s) at the origin).

double sqrt_q2(double r, double s, double y) {
  double w = s + r * r - y * y;
  return std::hypot(w, 2.0 * y * std::sqrt(s));
}

double f2_term(double r, double s, double y) {
  double w = s + r * r - y * y;
  double q = std::hypot(w, 2.0 * y * std::sqrt(s));
  double num = w >= 0.0 ? w + q : 4.0 * s * y * y / (q - w);
  return std::log(num / (2.0 * s));
}

ExponentParts exponent_alpha2(const LaplaceQuery& q) {
  const double s = q.s, y = q.y_norm;
  const double r1 = q.scheme.lfc_radius, r2 = q.scheme.lfa_outer;
  const double pis = kPi * s;

  double b = pis * f2_term(r1, s, y);
  double c = 0.0;
  if (r1 < r2) {
    double df2 = f2_term(r2, s, y) - f2_term(r1, s, y);
    if (q.scheme.policy == Policy::E) {
      c = pis * q.scheme.p * df2;
    } else {
      UV uv = policy_uv(q.scheme, 2.0);
      c = pis * ((uv.u - uv.v * (s - y * y)) * df2 +
                 uv.v * (sqrt_q2(r2, s, y) - sqrt_q2(r1, s, y)));
    }
  }
  return {q.lambda * std::max(0.0, b), q.lambda * std::max(0.0, c), 0.0};
}

// ---- alpha = 4 ------------------------------------------------------------

struct Eta4 {
  double eta, psi;
  double den;  // eta + r^2 - y^2, computed without cancellation
};

Eta4 eval_eta4(double r, double s, double y) {
  const double rr = r * r, yy = y * y;
  const double a = (rr - yy) * (rr - yy);
  const double hyp = std::hypot(a + s, 4.0 * r * y * std::sqrt(s));
  double eta2 = a >= s ? 0.5 * (hyp + (a - s))
                       : 2.0 * s * (rr + yy) * (rr + yy) / (hyp + (s - a));
  double eta = std::sqrt(eta2);
  double psi = std::sqrt(s) * (rr + yy) / eta;
  double den;
  if (rr >= yy) {
    den = eta + (rr - yy);
  } else {
    // eta^2 - (y^2-r^2)^2 = (hyp - (a+s))/2 = 8 s r^2 y^2 / (hyp + a + s)
    den = 8.0 * s * rr * yy / ((hyp + a + s) * (eta + (yy - rr)));
  }
  return {eta, psi, den};
}

// arctan((sqrt(s)+psi)/(eta+r^2-y^2)); atan2 yields pi/2 continuously at the
// r -> 0 denominator zero.
double atan_term(const Eta4& e, double sqrt_s) {
  return std::atan2(sqrt_s + e.psi, e.den);
}

ExponentParts exponent_alpha4(const LaplaceQuery& q) {
  const double s = q.s, y = q.y_norm;
  const double r1 = q.scheme.lfc_radius, r2 = q.scheme.lfa_outer;
  const double rs = std::sqrt(s);
  const double pirs = kPi * rs;

  Eta4 e1 = eval_eta4(r1, s, y);
  double t1 = atan_term(e1, rs);
  double b = pirs * (0.5 * kPi - t1);

  double c = 0.0;
  if (r1 < r2) {
    Eta4 e2 = eval_eta4(r2, s, y);
    double t2 = atan_term(e2, rs);
    if (q.scheme.policy == Policy::E) {
      c = pirs * q.scheme.p * (t1 - t2);
    } else {
      UV uv = policy_uv(q.scheme, 4.0);
      auto psi4 = [&](const Eta4& e, double r, double t) {
        double num = rs + e.psi;
        double ln_term = std::log(e.den * e.den + num * num);
        return 2.0 * uv.v * rs * y * y * ln_term -
               0.5 * uv.v * ((r * r + 3.0 * y * y) * e.psi - 3.0 * rs * e.eta) -
               (uv.u + uv.v * (y * y * y * y - s)) * t;
      };
      c = pirs * (psi4(e2, r2, t2) - psi4(e1, r1, t1));
    }
  }
  return {q.lambda * std::max(0.0, b), q.lambda * std::max(0.0, c), 0.0};
}

}  // namespace

EtaPsi eval_eta_psi(double r, double s, double y_norm) {
  if (!(s > 0.0)) throw std::invalid_argument("eval_eta_psi: s must be positive");
  if (r == 0.0 && y_norm == 0.0)
    throw std::invalid_argument("eval_eta_psi: r and y_norm both zero");
  Eta4 e = eval_eta4(r, s, y_norm);
  double rr = r * r, yy = y_norm * y_norm;
  return {e.eta, e.psi, (rr - yy) * (rr - yy) - s};
}

void check_query(const LaplaceQuery& q) {
  auto errs = scheme_errors(q.scheme);
  if (!(std::isfinite(q.s) && q.s >= 0.0)) errs.push_back("s must be finite and >= 0");
  if (!(std::isfinite(q.y_norm) && q.y_norm >= 0.0)) errs.push_back("y_norm must be >= 0");
  if (!(std::isfinite(q.lambda) && q.lambda >= 0.0)) errs.push_back("lambda must be >= 0");
  if (!(std::isfinite(q.alpha) && q.alpha >= 2.0)) errs.push_back("alpha must be >= 2");
  if (!errs.empty()) throw ValidationError(errs);
}

ExponentParts log_exponent_closed(const LaplaceQuery& q) {
  check_query(q);
  if (q.alpha != 2.0 && q.alpha != 4.0)
    throw std::invalid_argument("closed form requires alpha in {2, 4}: use laplace_numeric");
  if (q.s == 0.0 || q.lambda == 0.0) return {0.0, 0.0, 0.0};
  return q.alpha == 2.0 ? exponent_alpha2(q) : exponent_alpha4(q);
}

double laplace_closed(const LaplaceQuery& q) {
  return std::exp(-log_exponent_closed(q).total());
}

ExponentParts log_exponent_numeric(const LaplaceQuery& q, double rel_tol) {
  check_query(q);
  if (q.s == 0.0 || q.lambda == 0.0) return {0.0, 0.0, 0.0};
  const double s = q.s, y = q.y_norm, alpha = q.alpha;
  const double r1 = q.scheme.lfc_radius, r2 = q.scheme.lfa_outer;

  const double inner_tol = std::max(1e-13, 0.05 * rel_tol);
  auto ring = [&](double r) {
    // 2 * int_0^pi s / (s + ||x-y||^alpha) dtheta at radius r
    auto f = [&](double theta) {
      double d2 = r * r + y * y - 2.0 * r * y * std::cos(theta);
      return s / (s + std::pow(std::max(0.0, d2), 0.5 * alpha));
    };
    auto res = quad::integrate(f, 0.0, kPi, inner_tol, 0.0, 600);
    if (!res.converged)
      throw NumericError("laplace_numeric: angular quadrature did not converge",
                         res.abs_error);
    return 2.0 * res.value;
  };

  auto res_b = quad::integrate([&](double r) { return r * ring(r); }, 0.0, r1,
                               0.5 * rel_tol, 0.0, 2000);
  if (!res_b.converged)
    throw NumericError("laplace_numeric: radial quadrature (LFC) did not converge",
                       res_b.abs_error);
  double b = res_b.value, b_err = res_b.abs_error;

  double c = 0.0, c_err = 0.0;
  if (r1 < r2) {
    auto res_c = quad::integrate(
        [&](double r) { return selection_probability(q.scheme, alpha, r) * r * ring(r); },
        r1, r2, 0.5 * rel_tol, 0.0, 2000);
    if (!res_c.converged)
      throw NumericError("laplace_numeric: radial quadrature (LFA) did not converge",
                         res_c.abs_error);
    c = res_c.value;
    c_err = res_c.abs_error;
  }
  return {q.lambda * std::max(0.0, b), q.lambda * std::max(0.0, c),
          q.lambda * (b_err + c_err)};
}

double laplace_numeric(const LaplaceQuery& q, double rel_tol) {
  return std::exp(-log_exponent_numeric(q, rel_tol).total());
}

}  // namespace friendjam
