#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace friendjam {

inline constexpr double kPi = 3.14159265358979323846;

// Long-range jammer selection policy for nodes in the annulus [R1, R2].
enum class Policy { E, I, D };

struct JammingScheme {
  double lfc_radius = 1.0;   // R1: every legitimate node inside jams
  double lfa_outer = 10.0;   // R2: outer radius of the selection annulus
  Policy policy = Policy::E;
  double p = 0.0;            // selection probability, Policy E only
};

struct NetworkConfig {
  double disk_radius = 30.0;        // D
  double legit_intensity = 0.1;     // lambda, nodes per unit area
  double eaves_intensity = 0.001;   // lambda_e
  double tx_rx_distance = 1.0;      // l, receiver at (l, 0)
  double path_loss_alpha = 4.0;     // alpha >= 2
  double rx_sir_threshold = 0.5;    // beta
  double eaves_sir_threshold = 0.1; // beta_e
};

// Planar point in polar form about the transmitter at the origin.
struct Point {
  double radius = 0.0;
  double angle = 0.0;  // normalized to [0, 2*pi)

  Point() = default;
  Point(double r, double theta);
};

struct PointSet {
  std::vector<Point> points;
  double region_radius = 0.0;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::vector<std::string>& violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Quadrature failed to reach the requested tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_ = 0.0;
};

// Scheme-only checks (no disk radius available, e.g. Laplace queries).
std::vector<std::string> scheme_errors(const JammingScheme& scheme);

// Full list of invariant violations; empty means the pair is valid.
std::vector<std::string> validation_errors(const NetworkConfig& config,
                                           const JammingScheme& scheme);
void validate_or_throw(const NetworkConfig& config, const JammingScheme& scheme);

double distance(const Point& a, const Point& b);

// (signal_fade * tx_distance^-alpha) / interference; +inf when interference
// is zero. tx_distance must be positive.
double sir(double signal_fade, double tx_distance, double alpha, double interference);

std::string policy_name(const JammingScheme& scheme);  // "E(p=0.1)", "I", "D"

}  // namespace friendjam
