#include "config_file.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace friendjam {

namespace {

constexpr std::array<const char*, 16> kKnownKeys = {
    "D",  "lambda", "lambda_e", "l",       "alpha",        "beta",
    "beta_e", "R1", "R2",       "policy",  "p",            "sweep_axis",
    "sweep_values", "methods",  "n_trials", "seed"};

bool known_key(std::string_view key) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_at(const std::string& source, int line, int col,
                          const std::string& msg) {
  std::ostringstream os;
  os << source << ":" << line << ":" << col << ": " << msg;
  throw ConfigError(os.str());
}

double parse_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || static_cast<size_t>(end - begin) != value.size())
    throw ConfigError("key '" + key + "': not a number: '" + value + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  unsigned long long v = std::strtoull(begin, &end, 10);
  if (end == begin || static_cast<size_t>(end - begin) != value.size())
    throw ConfigError("key '" + key + "': not a nonnegative integer: '" + value + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(value);
  while (std::getline(is, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

}  // namespace

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::lambda: return "lambda";
    case SweepAxis::lambda_e: return "lambda_e";
    case SweepAxis::p: return "p";
    case SweepAxis::R1: return "R1";
    case SweepAxis::R2: return "R2";
    case SweepAxis::D: return "D";
    case SweepAxis::l: return "l";
    case SweepAxis::beta: return "beta";
    case SweepAxis::beta_e: return "beta_e";
  }
  return "?";
}

std::optional<SweepAxis> axis_from_name(std::string_view name) {
  for (SweepAxis a : {SweepAxis::lambda, SweepAxis::lambda_e, SweepAxis::p,
                      SweepAxis::R1, SweepAxis::R2, SweepAxis::D, SweepAxis::l,
                      SweepAxis::beta, SweepAxis::beta_e})
    if (name == axis_name(a)) return a;
  return std::nullopt;
}

void RawConfig::parse_text(std::string_view text, const std::string& source_name) {
  source_ = source_name;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    ++line_no;
    size_t line_start = pos;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view stripped = trim(line);
    if (stripped.empty()) continue;

    size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail_at(source_, line_no, 1, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    size_t key_col = line.find_first_not_of(" \t");
    (void)line_start;
    if (key.empty()) fail_at(source_, line_no, 1, "missing key before '='");
    if (!known_key(key))
      fail_at(source_, line_no, static_cast<int>(key_col) + 1, "unknown key '" + key + "'");
    if (value.empty())
      fail_at(source_, line_no, static_cast<int>(eq) + 2, "missing value for key '" + key + "'");
    if (entries_.count(key))
      fail_at(source_, line_no, static_cast<int>(key_col) + 1, "duplicate key '" + key + "'");
    entries_[key] = value;
  }
}

void RawConfig::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  parse_text(buf.str(), path);
}

void RawConfig::set(const std::string& key, const std::string& value) {
  if (!known_key(key)) throw ConfigError("unknown key '" + key + "'");
  if (trim(value).empty()) throw ConfigError("missing value for key '" + key + "'");
  entries_[key] = std::string(trim(value));
}

std::optional<std::string> RawConfig::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

ParsedConfig RawConfig::build() const {
  ParsedConfig out;
  auto req = [&](const char* key) -> const std::string& {
    auto it = entries_.find(key);
    if (it == entries_.end())
      throw ConfigError(source_ + ": missing required key '" + std::string(key) + "'");
    return it->second;
  };

  out.config.disk_radius = parse_double("D", req("D"));
  out.config.legit_intensity = parse_double("lambda", req("lambda"));
  out.config.eaves_intensity = parse_double("lambda_e", req("lambda_e"));
  out.config.tx_rx_distance = parse_double("l", req("l"));
  out.config.path_loss_alpha = parse_double("alpha", req("alpha"));
  out.config.rx_sir_threshold = parse_double("beta", req("beta"));
  out.config.eaves_sir_threshold = parse_double("beta_e", req("beta_e"));

  JammingScheme base;
  base.lfc_radius = parse_double("R1", req("R1"));
  base.lfa_outer = parse_double("R2", req("R2"));

  std::optional<double> p;
  if (auto v = get("p")) p = parse_double("p", *v);

  for (const std::string& tag : split_list(req("policy"))) {
    JammingScheme s = base;
    if (tag == "E") {
      if (!p) throw ConfigError(source_ + ": Policy E requires p");
      s.policy = Policy::E;
      s.p = *p;
    } else if (tag == "I") {
      s.policy = Policy::I;
    } else if (tag == "D") {
      s.policy = Policy::D;
    } else {
      throw ConfigError(source_ + ": key 'policy': unknown policy '" + tag +
                        "' (expected E, I or D)");
    }
    out.policies.push_back(s);
  }
  if (out.policies.empty()) throw ConfigError(source_ + ": key 'policy': empty list");
  out.scheme = out.policies.front();

  const bool any_sweep_key = entries_.count("sweep_axis") || entries_.count("sweep_values") ||
                             entries_.count("methods");
  if (any_sweep_key) {
    auto axis = axis_from_name(req("sweep_axis"));
    if (!axis)
      throw ConfigError(source_ + ": key 'sweep_axis': unknown axis '" +
                        req("sweep_axis") + "'");
    out.has_sweep = true;
    out.sweep_axis = *axis;
    for (const std::string& v : split_list(req("sweep_values")))
      out.sweep_values.push_back(parse_double("sweep_values", v));
    if (out.sweep_values.empty())
      throw ConfigError(source_ + ": key 'sweep_values': empty list");
    for (size_t i = 1; i < out.sweep_values.size(); ++i)
      if (!(out.sweep_values[i] > out.sweep_values[i - 1]))
        throw ConfigError(source_ + ": key 'sweep_values': values must be strictly ascending");
    for (const std::string& m : split_list(req("methods"))) {
      if (m == "closed") out.method_closed = true;
      else if (m == "numeric") out.method_numeric = true;
      else if (m == "montecarlo") out.method_montecarlo = true;
      else throw ConfigError(source_ + ": key 'methods': unknown method '" + m + "'");
    }
    if (!out.method_closed && !out.method_numeric && !out.method_montecarlo)
      throw ConfigError(source_ + ": key 'methods': empty list");
    if (out.sweep_axis == SweepAxis::p)
      for (const auto& s : out.policies)
        if (s.policy != Policy::E)
          throw ConfigError(source_ + ": sweep_axis 'p' requires Policy E only");
  }

  if (auto v = get("n_trials")) {
    out.n_trials = parse_u64("n_trials", *v);
    if (out.n_trials == 0) throw ConfigError(source_ + ": n_trials must be >= 1");
  }
  if (auto v = get("seed")) out.seed = parse_u64("seed", *v);

  validate_or_throw(out.config, out.scheme);
  for (const auto& s : out.policies) validate_or_throw(out.config, s);
  return out;
}

ParsedConfig parse_config_file(const std::string& path) {
  RawConfig raw;
  raw.load_file(path);
  return raw.build();
}

ParsedConfig parse_config_text(std::string_view text, const std::string& source_name) {
  RawConfig raw;
  raw.parse_text(text, source_name);
  return raw.build();
}

}  // namespace friendjam
