#include "model.hpp"

#include <cstdio>
#include <sstream>

namespace friendjam {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

Point::Point(double r, double theta) : radius(r) {
  if (!(r >= 0.0)) throw std::invalid_argument("Point radius must be >= 0");
  angle = std::fmod(theta, 2.0 * kPi);
  if (angle < 0.0) angle += 2.0 * kPi;
}

ValidationError::ValidationError(const std::vector<std::string>& violations)
    : std::runtime_error(join(violations)), violations_(violations) {}

std::vector<std::string> scheme_errors(const JammingScheme& s) {
  std::vector<std::string> errs;
  if (!(std::isfinite(s.lfc_radius) && s.lfc_radius > 0.0))
    errs.push_back("R1 must be positive");
  if (!std::isfinite(s.lfa_outer)) errs.push_back("R2 must be finite");
  if (s.lfc_radius > s.lfa_outer) errs.push_back("R1 exceeds R2");
  if (s.policy == Policy::E && !(s.p >= 0.0 && s.p <= 1.0))
    errs.push_back("p outside [0,1]");
  return errs;
}

std::vector<std::string> validation_errors(const NetworkConfig& c,
                                           const JammingScheme& s) {
  std::vector<std::string> errs = scheme_errors(s);
  if (!(std::isfinite(c.disk_radius) && c.disk_radius > 0.0))
    errs.push_back("D must be positive");
  if (!finite_nonneg(c.legit_intensity)) errs.push_back("lambda must be finite and >= 0");
  if (!finite_nonneg(c.eaves_intensity)) errs.push_back("lambda_e must be finite and >= 0");
  if (!(std::isfinite(c.tx_rx_distance) && c.tx_rx_distance > 0.0))
    errs.push_back("l must be positive");  // l = 0 leaves the receiver SIR undefined
  if (c.tx_rx_distance > c.disk_radius) errs.push_back("l exceeds D");
  if (!(std::isfinite(c.path_loss_alpha) && c.path_loss_alpha >= 2.0))
    errs.push_back("alpha must be >= 2");
  if (!(std::isfinite(c.rx_sir_threshold) && c.rx_sir_threshold > 0.0))
    errs.push_back("beta must be positive");
  if (!(std::isfinite(c.eaves_sir_threshold) && c.eaves_sir_threshold > 0.0))
    errs.push_back("beta_e must be positive");
  if (s.lfa_outer > c.disk_radius) errs.push_back("R2 exceeds D");
  return errs;
}

void validate_or_throw(const NetworkConfig& c, const JammingScheme& s) {
  auto errs = validation_errors(c, s);
  if (!errs.empty()) throw ValidationError(errs);
}

double distance(const Point& a, const Point& b) {
  double d2 = a.radius * a.radius + b.radius * b.radius -
              2.0 * a.radius * b.radius * std::cos(a.angle - b.angle);
  return std::sqrt(std::max(0.0, d2));
}

double sir(double signal_fade, double tx_distance, double alpha, double interference) {
  if (!(tx_distance > 0.0)) throw std::invalid_argument("sir: tx_distance must be positive");
  if (signal_fade < 0.0) throw std::invalid_argument("sir: negative fade");
  if (interference < 0.0) throw std::invalid_argument("sir: negative interference");
  if (interference == 0.0) return std::numeric_limits<double>::infinity();
  return signal_fade * std::pow(tx_distance, -alpha) / interference;
}

std::string policy_name(const JammingScheme& scheme) {
  switch (scheme.policy) {
    case Policy::I: return "I";
    case Policy::D: return "D";
    case Policy::E: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "E(p=%.12g)", scheme.p);
      return buf;
    }
  }
  return "?";
}

}  // namespace friendjam
