#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqcm/couplings.hpp"
#include "uqcm/protocol.hpp"

namespace uqcm {

/// Thrown for anything wrong with user-supplied settings.
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct RunConfig {
  Couplings couplings;
  int fock_cutoff = 2;
  double tolerance = 1e-9;
  InputQubit input;
  std::optional<double> theta, phi;  // Bloch angles; set when given instead of alpha/beta
  std::uint64_t seed = 7;
  int jobs = 1;
  double timing_jitter = 0;

  /// Checks invariants and normalizes the input qubit. Throws ConfigError.
  void finalize();
};

/// Parse "key = value" lines in file order; '#' starts a comment. Keys are the long flag
/// names with '-' or '_' (e.g. timing_jitter, lambda_prime).
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text);

/// Apply one setting. alpha/beta take "re" or "re,im".
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

RunConfig load_config_file(const std::string& path);

std::complex<double> parse_complex(const std::string& text);

}  // namespace uqcm
