#include "uqcm/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace uqcm {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string canonical_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  return key;
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v))
    throw ConfigError("config: '" + key + "' expects a number, got '" + text + "'");
  return v;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ConfigError("config: '" + key + "' expects an integer, got '" + text + "'");
  return v;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double("complex", text), 0.0};
  return {parse_double("complex", text.substr(0, comma)), parse_double("complex", text.substr(comma + 1))};
}

std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = canonical_key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& value) {
  const std::string key = canonical_key(raw_key);
  Couplings& c = cfg.couplings;
  if (key == "lambda") c.lambda = parse_double(key, value);
  else if (key == "omega_ge") c.omega_ge = parse_double(key, value);
  else if (key == "omega_ie") c.omega_ie = parse_double(key, value);
  else if (key == "lambda_prime") c.lambda_prime = parse_double(key, value);
  else if (key == "omega_gi") c.omega_gi = parse_double(key, value);
  else if (key == "delta") c.delta = parse_double(key, value);
  else if (key == "fock_cutoff") cfg.fock_cutoff = parse_int<int>(key, value);
  else if (key == "tolerance") cfg.tolerance = parse_double(key, value);
  else if (key == "theta") cfg.theta = parse_double(key, value);
  else if (key == "phi") cfg.phi = parse_double(key, value);
  else if (key == "alpha") { cfg.input.alpha = parse_complex(value); cfg.theta.reset(); cfg.phi.reset(); }
  else if (key == "beta") { cfg.input.beta = parse_complex(value); cfg.theta.reset(); cfg.phi.reset(); }
  else if (key == "seed") cfg.seed = parse_int<std::uint64_t>(key, value);
  else if (key == "jobs") cfg.jobs = parse_int<int>(key, value);
  else if (key == "timing_jitter") cfg.timing_jitter = parse_double(key, value);
  else throw ConfigError("config: unknown key '" + raw_key + "'");
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  RunConfig cfg;
  for (const auto& [key, value] : parse_key_values(buf.str())) apply_setting(cfg, key, value);
  return cfg;
}

void RunConfig::finalize() {
  try {
    couplings.validate();
  } catch (const DomainError& err) {
    throw ConfigError(err.what());
  }
  if (fock_cutoff < 1) throw ConfigError("config: fock_cutoff must be >= 1");
  if (!(tolerance > 0)) throw ConfigError("config: tolerance must be > 0");
  if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
  if (!(timing_jitter >= 0) || timing_jitter >= 1) throw ConfigError("config: timing_jitter must lie in [0, 1)");
  if (theta || phi) {
    input = InputQubit::from_bloch(theta.value_or(0.0), phi.value_or(0.0));
    return;
  }
  const double n = std::sqrt(std::norm(input.alpha) + std::norm(input.beta));
  if (!(n > 0)) throw ConfigError("config: input qubit has zero norm");
  input.alpha /= n;
  input.beta /= n;
}

}  // namespace uqcm
