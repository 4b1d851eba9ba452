#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace friendjam {

// Parse/validation failure; the message carries "source:line:col".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepAxis { lambda, lambda_e, p, R1, R2, D, l, beta, beta_e };

const char* axis_name(SweepAxis axis);
std::optional<SweepAxis> axis_from_name(std::string_view name);

struct ParsedConfig {
  NetworkConfig config;
  JammingScheme scheme;                 // first listed policy
  std::vector<JammingScheme> policies;  // one per `policy` list entry, in order

  bool has_sweep = false;
  SweepAxis sweep_axis = SweepAxis::lambda;
  std::vector<double> sweep_values;
  bool method_closed = false;
  bool method_numeric = false;
  bool method_montecarlo = false;
  std::uint64_t n_trials = 100000;
  std::optional<std::uint64_t> seed;
};

// Flat `key = value` file with `#` comments. Known keys:
//   D lambda lambda_e l alpha beta beta_e R1 R2 policy p
//   sweep_axis sweep_values methods n_trials seed
// Unknown keys are rejected with the line and column of the key.
class RawConfig {
 public:
  void parse_text(std::string_view text, const std::string& source_name = "<config>");
  void load_file(const std::string& path);

  // Override (or add) one key; key names are checked, values are checked at
  // build() time.
  void set(const std::string& key, const std::string& value);

  std::optional<std::string> get(const std::string& key) const;

  // Full semantic validation; throws ConfigError / ValidationError.
  ParsedConfig build() const;

 private:
  std::map<std::string, std::string> entries_;
  std::string source_ = "<config>";
};

ParsedConfig parse_config_file(const std::string& path);
ParsedConfig parse_config_text(std::string_view text,
                               const std::string& source_name = "<config>");

}  // namespace friendjam
